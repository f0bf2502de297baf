import pytest

from components.errors import ParameterError
from components.exact import oracle_ddds, oracle_ddis
from components.generate import generate_instance
from components.geometry import build_udg, hop_matrix
from components.grid import Box
from components.ptas import (
    ShiftConfig,
    ptas_ddds,
    ptas_ddds_iterations,
    ptas_ddis,
    ptas_ddis_iterations,
    solve_square_ddds,
    solve_square_ddis,
)
from components.verify import verify_solution
from helpers import LINE5, make_instance, seeded_instances


def global_hops(instance):
    return hop_matrix(build_udg(instance.points))


def uniform_instances(count, n_max, d_choices, side, seed):
    return [
        generate_instance(1 + index % n_max, d_choices[index % len(d_choices)], side, side, "uniform", seed + index)
        for index in range(count)
    ]


@pytest.mark.parametrize("i, j", [(0, None), (4, None), (2, 0), (1, 5)])
def test_shift_config_rejects_offsets_outside_range(i, j):
    with pytest.raises(ParameterError):
        ShiftConfig(k=3, d=2, i=i, j=j)


def test_shift_config_accepts_full_range():
    assert ShiftConfig(k=3, d=2, i=3, j=1).j == 1


@pytest.mark.parametrize("k, d", [(1, 2), (4, 1), (2, 3)])
def test_ptas_ddis_parameter_errors(k, d):
    with pytest.raises(ParameterError):
        ptas_ddis(make_instance(LINE5, d), k)


@pytest.mark.parametrize("k, d", [(1, 1), (2, 3)])
def test_ptas_ddds_parameter_errors(k, d):
    with pytest.raises(ParameterError):
        ptas_ddds(make_instance(LINE5, d), k)


def test_ptas_ddis_single_point():
    solution = ptas_ddis(make_instance([(7, 7)], 3), 6)
    assert solution.selected == [0]
    assert solution.algorithm == "ptas-k6"


def test_ptas_ddis_line_of_five():
    solution = ptas_ddis(make_instance(LINE5, 3), 6)
    assert solution.value == 2
    assert solution.stats["k"] == 6
    assert 1 <= solution.stats["best_i"] <= 6


def test_ptas_ddds_line_of_five():
    solution = ptas_ddds(make_instance(LINE5, 3), 5)
    assert solution.selected == [1]
    assert solution.stats["best_j"] == 5


def test_ptas_on_empty_instance():
    assert ptas_ddis(make_instance([], 2), 2).value == 0
    assert ptas_ddds(make_instance([], 1), 2).value == 0
    assert len(ptas_ddds_iterations(make_instance([], 1), 3)) == 9


@pytest.mark.parametrize("instance", seeded_instances(8, (20, 60), [2, 3], 8.0, 8.0, seed=41))
def test_every_ddis_iteration_is_feasible(instance):
    k = instance.d + 1
    iterations = ptas_ddis_iterations(instance, k)
    assert [s.stats["i"] for s in iterations] == list(range(1, k + 1))
    for solution in iterations:
        assert verify_solution(instance, solution).feasible
    assert ptas_ddis(instance, k).value == max(s.value for s in iterations)


@pytest.mark.parametrize("instance", seeded_instances(8, (20, 60), [1, 2], 8.0, 8.0, seed=42))
def test_every_ddds_iteration_is_feasible(instance):
    k = max(instance.d, 2) + 1
    iterations = ptas_ddds_iterations(instance, k)
    assert len(iterations) == k * k
    for solution in iterations:
        assert verify_solution(instance, solution).feasible
    assert ptas_ddds(instance, k).value == min(s.value for s in iterations)


def test_square_ddis_base_case_line():
    instance = make_instance([(1, 3), (2, 3), (3, 3), (4, 3), (5, 3)], 3)
    solution = solve_square_ddis(Box(0, 0, 6, 6), range(5), global_hops(instance), 3)
    assert solution.value == 2


def test_square_ddis_with_empty_band():
    instance = make_instance([(1, 1), (1, 1.5), (14, 14), (14, 14.5)], 2)
    solution = solve_square_ddis(Box(0, 0, 16, 16), range(4), global_hops(instance), 2, base_threshold=0)
    assert solution.value == 2


def test_square_ddis_with_every_point_in_the_band():
    coords = [(2.5, 0.5), (3.2, 1.1), (5.5, 2.5), (4.2, 4.0), (3.0, 6.5), (5.8, 7.5), (2.1, 3.3)]
    instance = make_instance(coords, 2)
    solution = solve_square_ddis(Box(0, 0, 8, 8), range(len(coords)), global_hops(instance), 2, base_threshold=0)
    assert solution.value == oracle_ddis(instance).value


def test_square_ddds_line_across_center():
    instance = make_instance([(2, 4), (3, 4), (4, 4), (5, 4), (6, 4)], 3)
    solution = solve_square_ddds(Box(0, 0, 8, 8), range(5), global_hops(instance), 3, base_threshold=0)
    assert solution.selected == [1]


def test_square_ddds_with_empty_band():
    instance = make_instance([(0.5, 0.5), (1.2, 0.5), (7.5, 7.5)], 1)
    solution = solve_square_ddds(Box(0, 0, 8, 8), range(3), global_hops(instance), 1, base_threshold=0)
    assert solution.value == 2


@pytest.mark.slow
@pytest.mark.parametrize("instance", uniform_instances(100, 14, [2, 3], 8.0, seed=4300))
def test_square_ddis_matches_oracle(instance):
    solution = solve_square_ddis(Box(0, 0, 8, 8), range(instance.n), global_hops(instance), instance.d, base_threshold=0)
    assert verify_solution(instance, solution).feasible
    assert solution.value == oracle_ddis(instance).value


@pytest.mark.slow
@pytest.mark.parametrize("instance", uniform_instances(100, 14, [1, 2, 3], 8.0, seed=4400))
def test_square_ddds_matches_oracle(instance):
    solution = solve_square_ddds(Box(0, 0, 8, 8), range(instance.n), global_hops(instance), instance.d, base_threshold=0)
    assert verify_solution(instance, solution).feasible
    assert solution.value == oracle_ddds(instance).value


# bounding boxes narrower than k put every point in one cell of iteration (k, k)
@pytest.mark.slow
@pytest.mark.parametrize(
    "k, instance",
    [(2, inst) for inst in uniform_instances(50, 14, [2], 1.9, seed=4500)]
    + [(3, inst) for inst in uniform_instances(25, 14, [3], 2.9, seed=4600)],
)
def test_ptas_ratio(k, instance):
    factor = (1 + 1 / k) ** 2
    assert ptas_ddis(instance, k).value >= oracle_ddis(instance).value / factor
    assert ptas_ddds(instance, k).value <= factor * oracle_ddds(instance).value


def test_small_k_can_fall_below_the_shifting_bound():
    # with k = d = 2 the separators cover x in [1, 3) mod 4 for i = 1 and [2, 4) mod 4 for i = 2,
    # so every point at x = 2.5 mod 4 is dropped by both shifts
    instance = make_instance([(0, 0), (2.5, 0), (6.5, 0), (10.5, 0), (14.5, 0)], 2)
    solution = ptas_ddis(instance, 2)
    assert [s.value for s in ptas_ddis_iterations(instance, 2)] == [1, 1]
    assert solution.selected == [0]
    assert oracle_ddis(instance).value == 5
    assert solution.value < oracle_ddis(instance).value / (1 + 1 / 2) ** 2
