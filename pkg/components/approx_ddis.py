import logging
from typing import Dict, List, Optional

from components.errors import ParameterError
from components.exact import exact_ddis_region
from components.geometry import HopMatrix, build_udg, hop_matrix
from components.grid import square_grid
from schemas.instance import Instance
from schemas.solution import ProblemKind, Solution

logger = logging.getLogger(__name__)


def _parity_union(optima: Dict[int, List[int]], parity: int) -> List[int]:
    return [p for index, chosen in optima.items() if index % 2 == parity for p in chosen]


def approx4_ddis(instance: Instance, hops: Optional[HopMatrix] = None) -> Solution:
    """
    4-factor approximation of the maximum distance-d independent set.

    Horizontal strips of width d are cut into d x d squares, each square is
    solved exactly, and the better of the odd/even unions is kept first per
    strip and then across odd/even strips.

    Args:
        instance (Instance): Points and d (d >= 2).
        hops (HopMatrix, optional): Global hop matrix, computed if omitted.

    Returns:
        Solution: A feasible DdIS of size at least ceil(OPT / 4).

    Raises:
        ParameterError: If d < 2.
    """
    d = instance.d
    if d < 2:
        raise ParameterError(f"approx4 for independent sets needs d >= 2, got {d}")
    if instance.n == 0:
        return Solution.build(ProblemKind.independent_set, [], d, "approx4")
    if hops is None:
        hops = hop_matrix(build_udg(instance.points))

    grid = square_grid(instance.coordinates(), float(d))
    by_strip: Dict[int, Dict[int, List[int]]] = {}
    for (strip, cell), members in grid.members().items():
        by_strip.setdefault(strip, {})[cell] = exact_ddis_region(members, hops, d).selected

    strip_best: Dict[int, List[int]] = {}
    for strip, optima in by_strip.items():
        odd, even = _parity_union(optima, 1), _parity_union(optima, 0)
        strip_best[strip] = odd if len(odd) >= len(even) else even

    s_odd, s_even = _parity_union(strip_best, 1), _parity_union(strip_best, 0)
    selected = s_odd if len(s_odd) >= len(s_even) else s_even
    logger.debug(
        "approx4 is: %d squares over %d strips, odd=%d even=%d",
        len(grid.members()),
        len(by_strip),
        len(s_odd),
        len(s_even),
    )
    return Solution.build(
        ProblemKind.independent_set,
        selected,
        d,
        "approx4",
        stats={
            "squares": len(grid.members()),
            "strips": len(by_strip),
            "odd_value": len(s_odd),
            "even_value": len(s_even),
        },
    )
