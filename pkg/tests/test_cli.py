import json

import pytest

import udg_cli
from components import solve_flow
from schemas.solution import ProblemKind, Solution


def run(*argv):
    return udg_cli.main([str(a) for a in argv])


def pipeline(root):
    instances = root / "instances"
    for seed in (1, 2):
        assert run("gen", "--n", 12, "--d", 2, "--width", 5, "--height", 5, "--seed", seed,
                   "--out", instances / f"u{seed}.txt") == 0
    assert run("gen", "--n", 12, "--d", 2, "--width", 5, "--height", 5, "--dist", "cluster",
               "--seed", 3, "--out", instances / "c3.txt") == 0
    for alg in ("exact", "approx4"):
        assert run("solve", "--in", instances / "u1.txt", "--problem", "ds", "--alg", alg,
                   "--out", root / f"{alg}.json") == 0
    assert run("solve", "--in", instances / "u1.txt", "--problem", "is", "--alg", "ptas", "--k", 3,
               "--out", root / "ptas.json") == 0
    assert run("bench", "--glob", instances / "*.txt", "--problem", "is", "--algs", "exact,approx4,ptas",
               "--k", 3, "--csv", root / "bench.csv") == 0


def test_pipeline_is_byte_identical(tmp_path):
    pipeline(tmp_path / "first")
    pipeline(tmp_path / "second")
    names = ["instances/u1.txt", "instances/u2.txt", "instances/c3.txt",
             "exact.json", "approx4.json", "ptas.json", "bench.csv"]
    for name in names:
        assert (tmp_path / "first" / name).read_bytes() == (tmp_path / "second" / name).read_bytes()

    bench_lines = (tmp_path / "first" / "bench.csv").read_text().splitlines()
    assert len(bench_lines) == 1 + 3 * 3
    assert bench_lines[1].startswith("c3,12,2,,approx4,is,")


def test_solve_and_verify(tmp_path, capsys):
    instance = tmp_path / "line.txt"
    instance.write_text("5 3\n0 0\n1 0\n2 0\n3 0\n4 0\n")
    out = tmp_path / "line.json"
    assert run("solve", "--in", instance, "--problem", "ds", "--alg", "exact", "--out", out, "--verify") == 0
    assert json.loads(out.read_text())["selected"] == [1]
    assert json.loads(capsys.readouterr().out)["feasible"] is True

    assert run("verify", "--in", instance, "--solution", out) == 0


def test_verify_infeasible_exit_code(tmp_path, capsys):
    instance = tmp_path / "line.txt"
    instance.write_text("5 3\n0 0\n1 0\n2 0\n3 0\n4 0\n")
    solution = tmp_path / "bad.json"
    solution.write_text('{"problem": "is", "d": 3, "algorithm": "manual", "selected": [0, 1], "value": 2}')
    assert run("verify", "--in", instance, "--solution", solution) == 3
    report = json.loads(capsys.readouterr().out)
    assert report["violations"][0]["points"] == [0, 1]


def test_parse_error_exit_code(tmp_path):
    instance = tmp_path / "short.txt"
    instance.write_text("2 3\n0 0\n")
    assert run("solve", "--in", instance, "--problem", "is", "--alg", "exact", "--out", tmp_path / "o.json") == 2


def test_missing_file_exit_code(tmp_path):
    assert run("solve", "--in", tmp_path / "nope.txt", "--problem", "is", "--alg", "exact",
               "--out", tmp_path / "o.json") == 2


def test_bad_parameters_exit_code(tmp_path):
    instance = tmp_path / "line.txt"
    instance.write_text("5 3\n0 0\n1 0\n2 0\n3 0\n4 0\n")
    assert run("solve", "--in", instance, "--problem", "is", "--alg", "ptas", "--out", tmp_path / "o.json") == 2
    assert run("bench", "--glob", tmp_path / "*.txt", "--problem", "is", "--algs", "exact,magic",
               "--csv", tmp_path / "b.csv") == 2
    assert run("gen", "--n", -3, "--d", 2, "--width", 1, "--height", 1, "--out", tmp_path / "g.txt") == 2


def test_usage_error_exits_two():
    with pytest.raises(SystemExit) as excinfo:
        run("solve", "--problem", "is")
    assert excinfo.value.code == 2


def test_infeasible_solve_dumps_the_instance(tmp_path, monkeypatch, capsys):
    instance = tmp_path / "line.txt"
    instance.write_text("5 3\n0 0\n1 0\n2 0\n3 0\n4 0\n")
    broken = Solution.build(ProblemKind.independent_set, [0, 1], 3, "exact")
    monkeypatch.setattr(solve_flow, "run_algorithm", lambda *args: broken)
    out = tmp_path / "o.json"
    assert run("solve", "--in", instance, "--problem", "is", "--alg", "exact", "--out", out) == 3
    captured = capsys.readouterr()
    assert json.loads(captured.out)["violations"][0]["points"] == [0, 1]
    assert captured.err.endswith("5 3\n0 0\n1 0\n2 0\n3 0\n4 0\n")
    assert not out.exists()
