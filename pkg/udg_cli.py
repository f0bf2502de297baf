import argparse
import logging
import sys
from pathlib import Path

from components.bench import bench_run, load_instances, write_csv
from components.errors import InfeasibleSolutionError, InputError, ParameterError
from components.files import read_instance, read_solution, write_instance, write_solution
from components.generate import Distribution, generate_instance
from components.settings import get_settings
from components.solve_flow import Algorithm, solve_and_verify
from components.verify import verify_solution
from schemas.solution import ProblemKind

logger = logging.getLogger("udg_cli")

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_INFEASIBLE = 3


def cmd_gen(args) -> int:
    instance = generate_instance(
        args.n, args.d, args.width, args.height, Distribution(args.dist), args.seed
    )
    comment = (
        f"gen n={args.n} d={args.d} width={args.width} height={args.height} "
        f"dist={args.dist} seed={args.seed}"
    )
    write_instance(args.out, instance, comment)
    logger.info("wrote %d points to %s", instance.n, args.out)
    return EXIT_OK


def cmd_solve(args) -> int:
    instance = read_instance(args.input)
    solution, report = solve_and_verify(instance, ProblemKind(args.problem), Algorithm(args.alg), args.k)
    write_solution(args.out, solution)
    logger.info("%s %s value %d written to %s", args.alg, args.problem, solution.value, args.out)
    if args.verify:
        print(report.model_dump_json(indent=2))
    return EXIT_OK


def cmd_verify(args) -> int:
    instance = read_instance(args.input)
    solution = read_solution(args.solution)
    report = verify_solution(instance, solution)
    print(report.model_dump_json(indent=2))
    return EXIT_OK if report.feasible else EXIT_INFEASIBLE


def cmd_bench(args) -> int:
    settings = get_settings()
    oracle_cap = settings.oracle_cap if args.oracle_cap is None else args.oracle_cap
    instances = load_instances(args.glob)
    try:
        algorithms = [Algorithm(a.strip()) for a in args.algs.split(",") if a.strip()]
    except ValueError as e:
        raise ParameterError(f"unknown algorithm in --algs {args.algs!r}") from e
    records = bench_run(
        instances,
        ProblemKind(args.problem),
        algorithms,
        oracle_cap,
        k=args.k,
        progress=args.progress,
    )
    write_csv(args.csv, records, timing=args.timing or settings.bench_timing)
    logger.info("wrote %d records to %s", len(records), args.csv)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="udg_cli",
        description="Distance-d independent and dominating sets on unit disk graphs.",
    )
    parser.add_argument("--log-level", default=None, help="overrides UDG_LOG_LEVEL")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a seeded random instance")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--d", type=int, required=True)
    gen.add_argument("--width", type=float, required=True)
    gen.add_argument("--height", type=float, required=True)
    gen.add_argument("--dist", choices=[d.value for d in Distribution], default="uniform")
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--out", type=Path, required=True)
    gen.set_defaults(handler=cmd_gen)

    solve = sub.add_parser("solve", help="solve an instance file")
    solve.add_argument("--in", dest="input", type=Path, required=True)
    solve.add_argument("--problem", choices=[p.value for p in ProblemKind], required=True)
    solve.add_argument("--alg", choices=[a.value for a in Algorithm], required=True)
    solve.add_argument("--k", type=int, default=None)
    solve.add_argument("--out", type=Path, required=True)
    solve.add_argument("--verify", action="store_true", help="print the verification report")
    solve.set_defaults(handler=cmd_solve)

    verify = sub.add_parser("verify", help="check a solution file against an instance")
    verify.add_argument("--in", dest="input", type=Path, required=True)
    verify.add_argument("--solution", type=Path, required=True)
    verify.set_defaults(handler=cmd_verify)

    bench = sub.add_parser("bench", help="compare algorithms against the oracle")
    bench.add_argument("--glob", required=True)
    bench.add_argument("--problem", choices=[p.value for p in ProblemKind], required=True)
    bench.add_argument("--algs", required=True, help="comma separated: exact,approx4,ptas")
    bench.add_argument("--k", type=int, default=None)
    bench.add_argument("--oracle-cap", type=int, default=None)
    bench.add_argument("--csv", type=Path, required=True)
    bench.add_argument("--timing", action="store_true", help="write wall times to the CSV")
    bench.add_argument("--progress", action="store_true")
    bench.set_defaults(handler=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        level = args.log_level or get_settings().log_level
        logging.basicConfig(level=level.upper(), format="%(levelname)s %(name)s: %(message)s")
        return args.handler(args)
    except InfeasibleSolutionError as e:
        logger.error("%s", e)
        if e.report is not None:
            print(e.report.model_dump_json(indent=2))
        if e.instance_dump:
            print(e.instance_dump, end="", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (InputError, ParameterError) as e:
        logger.error("%s", e)
        return EXIT_INPUT
    except OSError as e:
        logger.error("%s", e)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
