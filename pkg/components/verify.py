import logging
from itertools import combinations
from typing import Optional

from components.errors import InputError
from components.geometry import UNREACHABLE, HopMatrix, build_udg, hop_matrix
from schemas.instance import Instance
from schemas.solution import ProblemKind, Solution, VerificationReport

logger = logging.getLogger(__name__)

Violation = VerificationReport.Violation


def verify_solution(
    instance: Instance, solution: Solution, hops: Optional[HopMatrix] = None
) -> VerificationReport:
    """
    Check a solution against the instance it claims to solve.

    IS: every selected pair closer than d hops is a violation.
    DS: every point with no selected point within d hops is a violation.

    Args:
        instance (Instance): The instance.
        solution (Solution): Solution to check; its own d is used.
        hops (HopMatrix, optional): Global hop matrix, computed if omitted.

    Returns:
        VerificationReport: feasible is True iff there are no violations.

    Raises:
        InputError: If a selected index does not name a point of the instance.
    """
    for i in solution.selected:
        if not 0 <= i < instance.n:
            raise InputError(f"selected index {i} out of range for {instance.n} points")
    if hops is None:
        hops = hop_matrix(build_udg(instance.points))
    d = solution.d
    violations = []

    if solution.kind == ProblemKind.independent_set:
        for a, b in combinations(solution.selected, 2):
            hop = hops.hop(a, b)
            if hop < d:
                violations.append(
                    Violation(points=[a, b], hop=hop, message=f"points {a} and {b} are {hop} hops apart")
                )
    else:
        for p in range(instance.n):
            nearest = min((hops.hop(s, p) for s in solution.selected), default=UNREACHABLE)
            if nearest > d:
                hop = None if nearest == UNREACHABLE else nearest
                violations.append(
                    Violation(points=[p], hop=hop, message=f"point {p} has no selected point within {d} hops")
                )

    if violations:
        logger.info("%s solution infeasible: %d violations", solution.algorithm, len(violations))
    return VerificationReport(
        kind=solution.kind, d=d, feasible=not violations, violations=violations
    )
