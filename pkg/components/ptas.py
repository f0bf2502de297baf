"""
Two-level shifting PTAS for both problems, with the exact divide-and-conquer
solvers for a single k x k square.
"""

import logging
from dataclasses import dataclass
from itertools import combinations, product
from typing import Dict, List, Optional, Sequence, Tuple

from components.errors import ParameterError
from components.exact import (
    exact_ddds_region,
    exact_ddis_region,
    independent_subsets,
    min_dominating_cover,
)
from components.geometry import HopMatrix, UnitDiskGraph, build_udg, hop_matrix, window
from components.grid import Box, Partition1D, StripAxis, bounding_origin, build_grid
from components.settings import get_settings
from schemas.instance import Instance
from schemas.solution import ProblemKind, Solution

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ShiftConfig:
    k: int
    d: int
    i: int
    j: Optional[int] = None

    def __post_init__(self):
        if not 1 <= self.i <= self.k or (self.j is not None and not 1 <= self.j <= self.k):
            raise ParameterError(f"shift offsets must lie in 1..{self.k}, got ({self.i}, {self.j})")


def _check_is_parameters(k: int, d: int):
    if d < 2:
        raise ParameterError(f"independent set PTAS needs d >= 2, got {d}")
    if k < d:
        raise ParameterError(f"independent set PTAS needs k >= d, got k={k}, d={d}")


def _check_ds_parameters(k: int, d: int):
    if d < 1:
        raise ParameterError(f"d must be >= 1, got {d}")
    if k < max(d, 2):
        raise ParameterError(f"dominating set PTAS needs k >= max(d, 2), got k={k}, d={d}")


def _threshold(base_threshold: Optional[int]) -> int:
    return get_settings().square_base_threshold if base_threshold is None else base_threshold


def _split(box: Box, points: Sequence[int], coords, d: int):
    """Band points (within d of a center line) and the rest grouped by quadrant."""
    band, quadrants = [], ([], [], [], [])
    for p in points:
        x, y = coords[p]
        if box.near_center_lines(x, y, d):
            band.append(p)
        else:
            quadrants[box.quadrant_of(x, y)].append(p)
    return band, quadrants


def _square_is(box: Box, points: List[int], hops: HopMatrix, d: int, threshold: int, memo) -> List[int]:
    if not points:
        return []
    key = (box, tuple(points))
    if key in memo:
        return memo[key]
    if box.side <= 2 * d or len(points) <= threshold:
        memo[key] = exact_ddis_region(points, hops, d).selected
        return memo[key]

    coords = hops.graph.coords
    band, quadrants = _split(box, points, coords, d)
    sub_boxes = box.quadrants()
    best = None
    for guess in independent_subsets(band, hops, d):
        picked = list(guess)
        for sub_box, members in zip(sub_boxes, quadrants):
            if guess and members:
                # drop points within d - 1 hops of the guess
                keep = hops.between(guess, members).min(axis=0) >= d
                members = [p for p, ok in zip(members, keep) if ok]
            picked.extend(_square_is(sub_box, members, hops, d, threshold, memo))
        if best is None or len(picked) > len(best):
            best = picked
    memo[key] = sorted(best)
    return memo[key]


def solve_square_ddis(
    square: Box,
    region_points: Sequence[int],
    hops: HopMatrix,
    d: int,
    base_threshold: Optional[int] = None,
) -> Solution:
    """
    Exact maximum DdIS of the points in `square` by divide and conquer.

    Every independent subset of the band around the center lines is tried
    as the band's share of the answer; points too close to it are dropped
    and the four quadrants (band excluded) are solved recursively. Squares
    of side <= 2d or with few points are solved directly.

    Args:
        square (Box): Box containing every region point.
        region_points (Sequence[int]): Point indices in the square.
        hops (HopMatrix): Hop counts covering the region points.
        d (int): Distance parameter (>= 2).
        base_threshold (int, optional): Point count for the direct solve.

    Returns:
        Solution: An optimum for the square.
    """
    selected = _square_is(square, sorted(region_points), hops, d, _threshold(base_threshold), {})
    return Solution.build(ProblemKind.independent_set, selected, d, "square")


def _square_ds(
    box: Box,
    candidates: List[int],
    targets: List[int],
    hops: HopMatrix,
    d: int,
    threshold: int,
    memo,
) -> Optional[List[int]]:
    """Fewest candidates (all inside `box`) dominating `targets`, or None."""
    if not targets:
        return []
    key = (box, tuple(candidates), tuple(targets))
    if key in memo:
        return memo[key]
    if box.side <= 2 * d or len(candidates) <= threshold:
        if candidates == targets:
            memo[key] = exact_ddds_region(candidates, hops, d).selected
        else:
            memo[key] = min_dominating_cover(candidates, targets, hops, d)
        return memo[key]

    coords = hops.graph.coords
    band, inner = _split(box, candidates, coords, d)
    sub_boxes = box.quadrants()
    # quadrants whose own candidates can reach each target
    reachable: Dict[int, List[int]] = {
        t: [
            q
            for q, members in enumerate(inner)
            if members and hops.between(members, [t]).min() <= d
        ]
        for t in targets
    }

    best = None
    for size in range(len(band) + 1):
        if best is not None and size >= len(best):
            break
        for guess in combinations(band, size):
            if guess:
                hit = hops.between(list(guess), targets).min(axis=0) <= d
                open_targets = [t for t, ok in zip(targets, hit) if not ok]
            else:
                open_targets = targets
            if any(not reachable[t] for t in open_targets):
                continue
            if open_targets and best is not None and size + 1 >= len(best):
                continue
            # each undominated target is handed to one quadrant that can reach it
            for assignment in product(*(reachable[t] for t in open_targets)):
                handed: Tuple[List[int], ...] = ([], [], [], [])
                for t, q in zip(open_targets, assignment):
                    handed[q].append(t)
                total = list(guess)
                for q in range(4):
                    if not handed[q]:
                        continue
                    part = _square_ds(sub_boxes[q], inner[q], handed[q], hops, d, threshold, memo)
                    if part is None:
                        total = None
                        break
                    total.extend(part)
                if total is not None and (best is None or len(total) < len(best)):
                    best = total
    memo[key] = None if best is None else sorted(best)
    return memo[key]


def solve_square_ddds(
    square: Box,
    region_points: Sequence[int],
    window_hops: HopMatrix,
    d: int,
    base_threshold: Optional[int] = None,
) -> Solution:
    """
    Exact minimum DdDS of the points in `square`, dominators from the square.

    Subsets of the band around the center lines are guessed by increasing
    size. Points the guess leaves undominated are handed to a quadrant whose
    non-band points can reach them (every hand-off is tried) and the
    quadrants are solved recursively; quadrant solutions never pick band
    points.

    Args:
        square (Box): Box containing every region point.
        region_points (Sequence[int]): Point indices in the square.
        window_hops (HopMatrix): Hops over the square widened by d (or global).
        d (int): Distance parameter.
        base_threshold (int, optional): Point count for the direct solve.

    Returns:
        Solution: An optimum for the square.
    """
    points = sorted(region_points)
    selected = _square_ds(square, points, points, window_hops, d, _threshold(base_threshold), {})
    # the band guess equal to the whole band leaves only self-dominated quadrant points
    assert selected is not None
    return Solution.build(ProblemKind.dominating_set, selected, d, "square")


def ptas_ddis_iterations(
    instance: Instance,
    k: int,
    hops: Optional[HopMatrix] = None,
    base_threshold: Optional[int] = None,
) -> List[Solution]:
    """
    One solution per first-level offset i = 1..k.

    Vertical strips: first of width i, then d-wide separators alternating
    with k-wide working strips. Each working strip is cut horizontally the
    same way for every j = 1..k, its odd squares solved exactly, and the
    best j kept per strip. Working strips are more than d apart, so their
    union is independent.
    """
    d = instance.d
    _check_is_parameters(k, d)
    if instance.n == 0:
        return [
            Solution.build(ProblemKind.independent_set, [], d, f"ptas-k{k}", stats={"i": i})
            for i in range(1, k + 1)
        ]
    if hops is None:
        hops = hop_matrix(build_udg(instance.points))
    coords = instance.coordinates()
    x0, y0 = bounding_origin(coords)

    solutions = []
    for i in range(1, k + 1):
        config = ShiftConfig(k=k, d=d, i=i)
        strips = Partition1D(x0, float(config.i), (float(d), float(k)))
        chosen: Dict[int, Tuple[int, List[int]]] = {}
        for j in range(1, k + 1):
            cells = Partition1D(y0, float(j), (float(d), float(k)))
            grid = build_grid(coords, StripAxis.vertical, strips, cells)
            per_strip: Dict[int, List[int]] = {}
            for (strip, cell), members in grid.members().items():
                if strip % 2 == 0 or cell % 2 == 0:
                    continue
                box = grid.cell_box(strip, cell)
                found = solve_square_ddis(box, members, hops, d, base_threshold).selected
                per_strip.setdefault(strip, []).extend(found)
            for strip, found in per_strip.items():
                if strip not in chosen or len(found) > len(chosen[strip][1]):
                    chosen[strip] = (j, found)

        selected = [p for _, found in chosen.values() for p in found]
        logger.debug("ptas is k=%d i=%d: value %d over %d strips", k, i, len(selected), len(chosen))
        solutions.append(
            Solution.build(
                ProblemKind.independent_set,
                selected,
                d,
                f"ptas-k{k}",
                stats={"i": i, "working_strips": len(chosen)},
            )
        )
    return solutions


def ptas_ddis(
    instance: Instance,
    k: int,
    hops: Optional[HopMatrix] = None,
    base_threshold: Optional[int] = None,
) -> Solution:
    """
    Shifting-strategy PTAS for the maximum DdIS: the largest of the k
    iteration solutions, at least OPT / (1 + 1/k)^2 for k much larger than d.

    Raises:
        ParameterError: If d < 2 or k < d.
    """
    iterations = ptas_ddis_iterations(instance, k, hops, base_threshold)
    best = max(iterations, key=lambda s: s.value)
    return best.model_copy(update={"stats": {**best.stats, "k": k, "best_i": best.stats["i"]}})


def ptas_ddds_iterations(
    instance: Instance,
    k: int,
    graph: Optional[UnitDiskGraph] = None,
    base_threshold: Optional[int] = None,
) -> List[Solution]:
    """
    One solution per offset pair (i, j) in 1..k x 1..k: horizontal strips
    (first width i, then k) cut into cells (first width j, then k), every
    non-empty cell solved exactly with hops from the cell widened by d.
    """
    d = instance.d
    _check_ds_parameters(k, d)
    pairs = [(i, j) for i in range(1, k + 1) for j in range(1, k + 1)]
    if instance.n == 0:
        return [
            Solution.build(ProblemKind.dominating_set, [], d, f"ptas-k{k}", stats={"i": i, "j": j})
            for i, j in pairs
        ]
    if graph is None:
        graph = build_udg(instance.points)
    coords = graph.coords
    x0, y0 = bounding_origin(coords)

    windows: Dict[Tuple[int, ...], HopMatrix] = {}
    solutions = []
    for i, j in pairs:
        config = ShiftConfig(k=k, d=d, i=i, j=j)
        grid = build_grid(
            coords,
            StripAxis.horizontal,
            Partition1D(y0, float(config.i), (float(k),)),
            Partition1D(x0, float(config.j), (float(k),)),
        )
        selected = []
        for (strip, cell), members in grid.members().items():
            box = grid.cell_box(strip, cell)
            surround = tuple(window(coords, (box.x0, box.y0), (box.x1, box.y1), d))
            if surround not in windows:
                windows[surround] = hop_matrix(graph, surround)
            found = solve_square_ddds(box, members, windows[surround], d, base_threshold)
            selected.extend(found.selected)
        logger.debug("ptas ds k=%d (i, j)=(%d, %d): value %d", k, i, j, len(selected))
        solutions.append(
            Solution.build(
                ProblemKind.dominating_set,
                selected,
                d,
                f"ptas-k{k}",
                stats={"i": i, "j": j, "cells": len(grid.members())},
            )
        )
    return solutions


def ptas_ddds(
    instance: Instance,
    k: int,
    graph: Optional[UnitDiskGraph] = None,
    base_threshold: Optional[int] = None,
) -> Solution:
    """
    Shifting-strategy PTAS for the minimum DdDS: the smallest of the k^2
    iteration solutions, at most (1 + 1/k)^2 OPT for k much larger than d.

    Raises:
        ParameterError: If k < max(d, 2).
    """
    iterations = ptas_ddds_iterations(instance, k, graph, base_threshold)
    best = min(iterations, key=lambda s: s.value)
    stats = {**best.stats, "k": k, "best_i": best.stats["i"], "best_j": best.stats["j"]}
    return best.model_copy(update={"stats": stats})
