import math
from itertools import product

import pytest

from components.approx_ddds import approx4_ddds, cell_color, cell_side
from components.exact import oracle_ddds
from components.verify import verify_solution
from helpers import LINE5, make_instance, seeded_instances
from schemas.instance import Instance, Point


@pytest.mark.parametrize(
    "cell, color",
    [((0, 0), 1), ((1, 0), 2), ((0, 1), 3), ((1, 1), 4), ((2, 2), 1), ((5, 4), 2)],
)
def test_cell_color(cell, color):
    assert cell_color(cell) == color


def test_same_color_cells_are_far_apart():
    d = 2
    side = cell_side(d)
    cells = list(product(range(6), range(6)))
    for a, b in product(cells, cells):
        if a == b or cell_color(a) != cell_color(b):
            continue
        gap_x = max(0, abs(a[0] - b[0]) - 1) * side
        gap_y = max(0, abs(a[1] - b[1]) - 1) * side
        assert math.hypot(gap_x, gap_y) > 2 * d


def test_cell_side():
    assert cell_side(2) == pytest.approx(6 / math.sqrt(2))


def test_line_of_five_fits_one_cell():
    solution = approx4_ddds(make_instance(LINE5, 3))
    assert solution.selected == [1]
    assert solution.stats["cells"] == 1
    assert solution.stats["color_1_value"] == 1


def test_far_points_each_need_a_dominator():
    solution = approx4_ddds(make_instance([(0, 0), (20, 0)], 2))
    assert solution.selected == [0, 1]


def test_empty_instance():
    assert approx4_ddds(make_instance([], 1)).value == 0


def test_color_totals_add_up():
    instance = seeded_instances(1, (80, 80), [1], 10.0, 10.0, seed=31)[0]
    solution = approx4_ddds(instance)
    assert sum(solution.stats[f"color_{c}_value"] for c in range(1, 5)) == solution.value


@pytest.mark.slow
@pytest.mark.parametrize("instance", seeded_instances(100, (1, 18), [1, 2, 3], 12.0, 12.0, seed=32))
def test_within_four_times_optimum(instance):
    solution = approx4_ddds(instance)
    assert verify_solution(instance, solution).feasible
    assert solution.value <= 4 * oracle_ddds(instance).value


@pytest.mark.slow
@pytest.mark.parametrize("instance", seeded_instances(200, (50, 400), [1, 2, 3], 20.0, 20.0, seed=33))
def test_feasible_on_large_instances(instance):
    assert verify_solution(instance, approx4_ddds(instance)).feasible


@pytest.mark.parametrize("instance", seeded_instances(6, (20, 60), [1, 2, 3], 12.0, 12.0, seed=34))
def test_translation_and_repeat_give_the_same_answer(instance):
    # multiples of 1/8 keep every difference exact after the shift
    snapped = [Point(x=round(p.x * 8) / 8, y=round(p.y * 8) / 8) for p in instance.points]
    moved = [Point(x=p.x - 24, y=p.y + 40) for p in snapped]
    original = approx4_ddds(Instance(points=snapped, d=instance.d))
    assert approx4_ddds(Instance(points=snapped, d=instance.d)) == original
    assert approx4_ddds(Instance(points=moved, d=instance.d)).selected == original.selected
