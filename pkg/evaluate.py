from pathlib import Path

from tqdm import tqdm

from components.bench import bench_run, write_csv
from components.files import write_instance
from components.generate import Distribution, generate_instance
from components.solve_flow import Algorithm
from schemas.solution import ProblemKind

instances_dir = Path("./data/instances")
outputs_dir = Path("./data/eval_outputs")

suites = {
    # small enough for the oracle
    "small": dict(n=14, width=6.0, height=6.0),
    # feasibility only
    "large": dict(n=200, width=20.0, height=20.0),
}


def build_suite(name, n, width, height, d, count=10):
    instances = []
    for seed in tqdm(range(count), desc=f"gen {name} d={d}"):
        for dist in Distribution:
            instance = generate_instance(n, d, width, height, dist, seed)
            instance_id = f"{name}-d{d}-{dist.value}-{seed:03d}"
            write_instance(instances_dir / f"{instance_id}.txt", instance)
            instances.append((instance_id, instance))
    return instances


for d in (2, 3):
    for name, shape in suites.items():
        instances = build_suite(name, d=d, **shape)
        algorithms = [Algorithm.approx4] if name == "large" else list(Algorithm)
        for problem in ProblemKind:
            records = bench_run(
                instances, problem, algorithms, oracle_cap=20, k=max(d, 2) + 1, progress=True
            )
            write_csv(outputs_dir / f"{name}_d{d}_{problem.value}.csv", records)
