import glob
import logging
import time
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Tuple, Union

import pandas as pd
from tqdm import tqdm

from components.errors import InputError
from components.exact import oracle_ddds, oracle_ddis
from components.files import read_instance
from components.solve_flow import Algorithm, algorithm_label, solve_and_verify
from schemas.bench import BenchRecord
from schemas.instance import Instance
from schemas.solution import ProblemKind

logger = logging.getLogger(__name__)

BENCH_COLUMNS = list(BenchRecord.model_fields)


def load_instances(pattern: str) -> List[Tuple[str, Instance]]:
    """
    Instances matching a glob, id = file stem, sorted by path.

    Raises:
        InputError: If two matched files share a stem.
    """
    paths = sorted(glob.glob(pattern))
    seen = {}
    for path in paths:
        stem = Path(path).stem
        if stem in seen:
            raise InputError(f"instance id {stem!r} used by both {seen[stem]} and {path}")
        seen[stem] = path
    return [(Path(path).stem, read_instance(path)) for path in paths]


def _oracle_value(instance: Instance, problem: ProblemKind, oracle_cap: int) -> Optional[int]:
    if instance.n > oracle_cap:
        return None
    oracle = oracle_ddis if problem == ProblemKind.independent_set else oracle_ddds
    return oracle(instance, cap=oracle_cap).value


def _ratio(value: int, oracle: Optional[int]) -> Optional[float]:
    if oracle is None:
        return None
    if oracle == 0:
        # only the empty instance has a zero optimum
        return 1.0
    return value / oracle


def bench_run(
    instances: Sequence[Tuple[str, Instance]],
    problem: ProblemKind,
    algorithms: Iterable[Algorithm],
    oracle_cap: int,
    k: Optional[int] = None,
    progress: bool = False,
) -> List[BenchRecord]:
    """
    Run every algorithm on every instance and compare against the oracle.

    Args:
        instances (Sequence[Tuple[str, Instance]]): (instance id, instance) pairs.
        problem (ProblemKind): is or ds.
        algorithms (Iterable[Algorithm]): Algorithms to run.
        oracle_cap (int): Oracle columns are filled only for n <= oracle_cap.
        k (int, optional): Shifting parameter for ptas.
        progress (bool): Show a tqdm progress bar.

    Returns:
        List[BenchRecord]: Sorted by (instance id, algorithm label).

    Raises:
        InfeasibleSolutionError: As soon as any solution fails verification.
    """
    problem = ProblemKind(problem)
    algorithms = [Algorithm(a) for a in algorithms]
    jobs = [
        (position, iid, inst, alg)
        for position, (iid, inst) in enumerate(instances)
        for alg in algorithms
    ]

    records = []
    # keyed by position: ids need not be unique when callers build the list
    oracle_values = {}
    for position, instance_id, instance, algorithm in tqdm(jobs, disable=not progress, desc="bench"):
        if position not in oracle_values:
            oracle_values[position] = _oracle_value(instance, problem, oracle_cap)
        oracle = oracle_values[position]

        started = time.perf_counter()
        solution, report = solve_and_verify(instance, problem, algorithm, k)
        wall_ms = (time.perf_counter() - started) * 1000.0

        record = BenchRecord(
            instance_id=instance_id,
            n=instance.n,
            d=instance.d,
            k=k if algorithm == Algorithm.ptas else None,
            algorithm=algorithm_label(algorithm, k),
            problem=problem,
            value=solution.value,
            oracle=oracle,
            ratio=_ratio(solution.value, oracle),
            wall_ms=wall_ms,
            feasible=report.feasible,
        )
        logger.info(
            "%s %s: value=%d oracle=%s", instance_id, record.algorithm, record.value, oracle
        )
        records.append(record)

    return sorted(records, key=lambda r: (r.instance_id, r.algorithm))


def records_frame(records: Sequence[BenchRecord], timing: bool = False) -> pd.DataFrame:
    frame = pd.DataFrame(
        [r.model_dump(mode="json") for r in records], columns=BENCH_COLUMNS
    )
    if not timing:
        frame["wall_ms"] = None
    return frame.astype(
        {
            "n": "Int64",
            "d": "Int64",
            "k": "Int64",
            "value": "Int64",
            "oracle": "Int64",
            "ratio": "float64",
            "wall_ms": "float64",
        }
    )


def write_csv(path: Union[str, Path], records: Sequence[BenchRecord], timing: bool = False):
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    records_frame(records, timing).to_csv(
        path, index=False, float_format="%.6f", lineterminator="\n"
    )
