import logging
import math
from collections import Counter
from typing import Optional, Tuple

from components.errors import ParameterError
from components.exact import exact_ddds_region
from components.geometry import UnitDiskGraph, build_udg, hop_matrix, window
from components.grid import square_grid
from schemas.instance import Instance
from schemas.solution import ProblemKind, Solution

logger = logging.getLogger(__name__)


def cell_side(d: int) -> float:
    return 3 * d / math.sqrt(2)


def cell_color(cell: Tuple[int, int]) -> int:
    """
    Color in {1, 2, 3, 4} of the 2 x 2 block pattern; `cell` is (col, row).
    Same-colored cells always have a whole cell between them in some axis.
    """
    col, row = cell
    return 2 * (row % 2) + (col % 2) + 1


def approx4_ddds(instance: Instance, graph: Optional[UnitDiskGraph] = None) -> Solution:
    """
    4-factor approximation of the minimum distance-d dominating set.

    The bounding region is cut into (3/sqrt(2))d squares; each non-empty cell
    gets its exact minimum dominating set, dominators taken from the cell and
    hops measured inside the cell widened by d on every side.

    Args:
        instance (Instance): Points and d (d >= 1).
        graph (UnitDiskGraph, optional): Prebuilt graph of the instance.

    Returns:
        Solution: The union of the per-cell solutions.
    """
    d = instance.d
    if d < 1:
        raise ParameterError(f"d must be >= 1, got {d}")
    if instance.n == 0:
        return Solution.build(ProblemKind.dominating_set, [], d, "approx4")
    if graph is None:
        graph = build_udg(instance.points)

    side = cell_side(d)
    grid = square_grid(graph.coords, side)
    selected = []
    per_color = Counter()
    for (strip, cell), members in grid.members().items():
        box = grid.cell_box(strip, cell)
        surround = window(graph.coords, (box.x0, box.y0), (box.x1, box.y1), d)
        local = exact_ddds_region(members, hop_matrix(graph, surround), d)
        selected.extend(local.selected)
        # grid indices are 1-based, colors use 0-based (col, row)
        per_color[cell_color((cell - 1, strip - 1))] += local.value

    logger.debug("approx4 ds: %d cells, per color %s", len(grid.members()), dict(per_color))
    stats = {"cells": len(grid.members()), "cell_side": side}
    stats.update({f"color_{c}_value": per_color[c] for c in range(1, 5)})
    return Solution.build(ProblemKind.dominating_set, selected, d, "approx4", stats=stats)
