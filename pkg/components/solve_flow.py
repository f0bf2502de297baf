import logging
from enum import Enum
from typing import Optional, Tuple

from components.approx_ddds import approx4_ddds
from components.approx_ddis import approx4_ddis
from components.errors import InfeasibleSolutionError, ParameterError
from components.exact import exact_ddds_region, exact_ddis_region
from components.files import format_instance
from components.geometry import build_udg, hop_matrix
from components.ptas import ptas_ddds, ptas_ddis
from components.verify import verify_solution
from schemas.instance import Instance
from schemas.solution import ProblemKind, Solution, VerificationReport

logger = logging.getLogger(__name__)


class Algorithm(str, Enum):
    exact = "exact"
    approx4 = "approx4"
    ptas = "ptas"


def algorithm_label(algorithm: Algorithm, k: Optional[int] = None) -> str:
    algorithm = Algorithm(algorithm)
    return f"ptas-k{k}" if algorithm == Algorithm.ptas else algorithm.value


def run_algorithm(
    instance: Instance,
    problem: ProblemKind,
    algorithm: Algorithm,
    k: Optional[int] = None,
) -> Solution:
    """
    Dispatch one solver on the whole instance.

    Raises:
        ParameterError: If ptas is requested without k, or the solver rejects d/k.
    """
    problem, algorithm = ProblemKind(problem), Algorithm(algorithm)
    if algorithm == Algorithm.ptas and k is None:
        raise ParameterError("ptas needs --k")
    graph = build_udg(instance.points)
    everyone = list(range(instance.n))

    if problem == ProblemKind.independent_set:
        hops = hop_matrix(graph)
        if algorithm == Algorithm.exact:
            return exact_ddis_region(everyone, hops, instance.d)
        if algorithm == Algorithm.approx4:
            return approx4_ddis(instance, hops)
        return ptas_ddis(instance, k, hops)

    if algorithm == Algorithm.exact:
        return exact_ddds_region(everyone, hop_matrix(graph), instance.d)
    if algorithm == Algorithm.approx4:
        return approx4_ddds(instance, graph)
    return ptas_ddds(instance, k, graph)


def solve_and_verify(
    instance: Instance,
    problem: ProblemKind,
    algorithm: Algorithm,
    k: Optional[int] = None,
) -> Tuple[Solution, VerificationReport]:
    """
    Run a solver and re-check its output.

    Raises:
        InfeasibleSolutionError: If verification finds any violation.
    """
    solution = run_algorithm(instance, problem, algorithm, k)
    report = verify_solution(instance, solution)
    if not report.feasible:
        logger.error(
            "%s produced an infeasible %s solution on %d points",
            solution.algorithm,
            solution.kind.value,
            instance.n,
        )
        raise InfeasibleSolutionError(
            f"{solution.algorithm} produced an infeasible solution "
            f"({len(report.violations)} violations)",
            report=report,
            instance_dump=format_instance(instance),
        )
    return solution, report
