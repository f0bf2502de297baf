"""
Exact per-region solvers (merged components + pruned exhaustive search) and
the unpruned brute-force oracles used to certify them.
"""

import logging
from itertools import combinations
from typing import List, Optional, Sequence

import numpy as np

from components.errors import OracleCapExceeded, ParameterError
from components.geometry import HopMatrix, build_udg, hop_matrix, merged_components
from components.settings import get_settings
from schemas.instance import Instance
from schemas.solution import ProblemKind, Solution

logger = logging.getLogger(__name__)


def _bitmasks(relation: np.ndarray) -> List[int]:
    """Row r of a boolean matrix as an int whose bit c is relation[r, c]."""
    masks = []
    for row in relation:
        mask = 0
        for c in np.flatnonzero(row):
            mask |= 1 << int(c)
        masks.append(mask)
    return masks


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def max_independent_subset(points: Sequence[int], hops: HopMatrix, d: int) -> List[int]:
    """
    Lexicographically smallest maximum subset of `points` with pairwise hop >= d.

    Include-first depth-first search over ascending candidates; a branch is
    cut once it cannot beat the best size found so far, so ties keep the
    earlier (lexicographically smaller) set.
    """
    points = sorted(points)
    if not points:
        return []
    compatible = _bitmasks(hops.submatrix(points) >= d)
    best: List[int] = []

    def extend(chosen: List[int], candidates: int):
        nonlocal best
        if len(chosen) + candidates.bit_count() <= len(best):
            return
        if not candidates:
            best = chosen
            return
        low = candidates & -candidates
        v = low.bit_length() - 1
        rest = candidates ^ low
        extend(chosen + [v], rest & compatible[v])
        extend(chosen, rest)

    extend([], (1 << len(points)) - 1)
    return [points[i] for i in best]


def independent_subsets(points: Sequence[int], hops: HopMatrix, d: int):
    """Yield every pairwise hop->=d subset of `points` (the empty set first)."""
    points = sorted(points)
    compatible = _bitmasks(hops.submatrix(points) >= d) if points else []

    def extend(chosen: List[int], candidates: int):
        yield [points[i] for i in chosen]
        for v in _bits(candidates):
            later = candidates & ~((1 << (v + 1)) - 1)
            yield from extend(chosen + [v], later & compatible[v])

    yield from extend([], (1 << len(points)) - 1)


def min_dominating_cover(
    candidates: Sequence[int], targets: Sequence[int], hops: HopMatrix, d: int
) -> Optional[List[int]]:
    """
    Smallest subset of `candidates` putting every target within hop d of a
    member; among equal sizes the lexicographically smallest. Branches on
    the lowest undominated target and tries its dominators in ascending order.

    Returns:
        Optional[List[int]]: Ascending selection, or None if some target has
        no candidate within hop d.
    """
    candidates = sorted(set(candidates))
    targets = sorted(set(targets))
    if not targets:
        return []
    if not candidates:
        return None
    reach = _bitmasks(hops.between(candidates, targets) <= d)
    full = (1 << len(targets)) - 1
    dominators = [[] for _ in targets]
    for c, mask in enumerate(reach):
        for t in _bits(mask):
            dominators[t].append(c)
    if any(not options for options in dominators):
        return None

    widest = max(mask.bit_count() for mask in reach)
    best: Optional[List[int]] = None

    def search(chosen: List[int], covered: int):
        nonlocal best
        if covered == full:
            ordered = sorted(chosen)
            if best is None or len(ordered) < len(best) or (
                len(ordered) == len(best) and ordered < best
            ):
                best = ordered
            return
        uncovered = full & ~covered
        # no candidate covers more than `widest` targets
        needed = -(-uncovered.bit_count() // widest)
        if best is not None and len(chosen) + needed > len(best):
            return
        t = (uncovered & -uncovered).bit_length() - 1
        for c in dominators[t]:
            search(chosen + [c], covered | reach[c])

    search([], 0)
    return [candidates[i] for i in best]


def _check_d(d: int, minimum: int):
    if d < minimum:
        raise ParameterError(f"d must be >= {minimum}, got {d}")


def exact_ddis_region(region_points: Sequence[int], hops: HopMatrix, d: int) -> Solution:
    """
    Maximum distance-d independent subset of a region: union of per merged
    component optima, components merged with parameter d.
    """
    _check_d(d, 2)
    decomposition = merged_components(hops.graph, hops, region_points, d)
    selected = []
    for component in decomposition.components:
        selected.extend(max_independent_subset(component, hops, d))
    return Solution.build(
        ProblemKind.independent_set,
        selected,
        d,
        "exact",
        stats={"components": len(decomposition)},
    )


def exact_ddds_region(region_points: Sequence[int], hops: HopMatrix, d: int) -> Solution:
    """
    Minimum distance-d dominating subset of a region, dominators drawn from
    the region. Components are merged with parameter d + 1: groups within
    hop d of each other could dominate across.
    """
    _check_d(d, 1)
    decomposition = merged_components(hops.graph, hops, region_points, d + 1)
    selected = []
    for component in decomposition.components:
        cover = min_dominating_cover(component, component, hops, d)
        # every point dominates itself, so a component always has a cover
        assert cover is not None
        selected.extend(cover)
    return Solution.build(
        ProblemKind.dominating_set,
        selected,
        d,
        "exact",
        stats={"components": len(decomposition)},
    )


def _oracle_hops(instance: Instance, cap: Optional[int]) -> HopMatrix:
    cap = get_settings().oracle_cap if cap is None else cap
    if instance.n > cap:
        raise OracleCapExceeded(instance.n, cap)
    return hop_matrix(build_udg(instance.points))


def oracle_ddis(instance: Instance, cap: Optional[int] = None) -> Solution:
    """Maximum DdIS by checking every subset, largest sizes first."""
    _check_d(instance.d, 2)
    hops = _oracle_hops(instance, cap)
    d = instance.d
    far = (hops.table >= d).tolist()
    for size in range(instance.n, 0, -1):
        for subset in combinations(range(instance.n), size):
            if all(far[a][b] for a, b in combinations(subset, 2)):
                return Solution.build(ProblemKind.independent_set, subset, d, "oracle")
    return Solution.build(ProblemKind.independent_set, [], d, "oracle")


def oracle_ddds(instance: Instance, cap: Optional[int] = None) -> Solution:
    """Minimum DdDS by checking every subset, smallest sizes first."""
    _check_d(instance.d, 1)
    hops = _oracle_hops(instance, cap)
    if instance.n == 0:
        return Solution.build(ProblemKind.dominating_set, [], instance.d, "oracle")
    reach = _bitmasks(hops.table <= instance.d)
    full = (1 << instance.n) - 1
    for size in range(1, instance.n + 1):
        for subset in combinations(range(instance.n), size):
            covered = 0
            for v in subset:
                covered |= reach[v]
            if covered == full:
                return Solution.build(ProblemKind.dominating_set, subset, instance.d, "oracle")
    raise AssertionError("the full point set always dominates")
