import math
from enum import Enum

import numpy as np

from components.errors import ParameterError
from schemas.instance import Instance, Point


class Distribution(str, Enum):
    uniform = "uniform"
    cluster = "cluster"


def generate_instance(
    n: int,
    d: int,
    width: float,
    height: float,
    distribution: Distribution = Distribution.uniform,
    seed: int = 0,
) -> Instance:
    """
    Seeded random instance.

    uniform: i.i.d. points in [0, width] x [0, height].
    cluster: ceil(n / 10) uniform centers, each point placed within radius 1
    of a center chosen at random.

    Raises:
        ParameterError: On a negative n, d < 1 or a non-positive box.
    """
    if n < 0:
        raise ParameterError(f"n must be >= 0, got {n}")
    if d < 1:
        raise ParameterError(f"d must be >= 1, got {d}")
    if not (math.isfinite(width) and math.isfinite(height)) or width <= 0 or height <= 0:
        raise ParameterError(f"width and height must be positive, got {width} x {height}")
    distribution = Distribution(distribution)

    rng = np.random.default_rng(seed)
    if distribution == Distribution.uniform:
        xs = rng.uniform(0.0, width, n)
        ys = rng.uniform(0.0, height, n)
    else:
        n_centers = max(1, math.ceil(n / 10))
        centers = np.column_stack(
            (rng.uniform(0.0, width, n_centers), rng.uniform(0.0, height, n_centers))
        )
        owner = rng.integers(0, n_centers, n)
        # sqrt keeps the offsets uniform over the disk
        radius = np.sqrt(rng.uniform(0.0, 1.0, n))
        angle = rng.uniform(0.0, 2 * math.pi, n)
        xs = centers[owner, 0] + radius * np.cos(angle)
        ys = centers[owner, 1] + radius * np.sin(angle)

    points = [Point(x=float(x), y=float(y)) for x, y in zip(xs, ys)]
    return Instance(points=points, d=d)
