"""Axis-aligned boxes, shifted 1-D partitions and the strip/cell grids built from them."""

import math
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Tuple

import numpy as np

from components.errors import ParameterError


@dataclass(frozen=True)
class Box:
    """Half-open box [x0, x1) x [y0, y1)."""

    x0: float
    y0: float
    x1: float
    y1: float

    @property
    def width(self) -> float:
        return self.x1 - self.x0

    @property
    def height(self) -> float:
        return self.y1 - self.y0

    @property
    def side(self) -> float:
        return max(self.width, self.height)

    @property
    def center(self) -> Tuple[float, float]:
        return (self.x0 + self.x1) / 2, (self.y0 + self.y1) / 2

    def quadrants(self) -> Tuple["Box", "Box", "Box", "Box"]:
        """Sub-boxes cut by the center lines, ordered (lower-left, lower-right, upper-left, upper-right)."""
        cx, cy = self.center
        return (
            Box(self.x0, self.y0, cx, cy),
            Box(cx, self.y0, self.x1, cy),
            Box(self.x0, cy, cx, self.y1),
            Box(cx, cy, self.x1, self.y1),
        )

    def quadrant_of(self, x: float, y: float) -> int:
        cx, cy = self.center
        return (1 if x >= cx else 0) + (2 if y >= cy else 0)

    def near_center_lines(self, x: float, y: float, margin: float) -> bool:
        cx, cy = self.center
        return abs(x - cx) <= margin or abs(y - cy) <= margin


@dataclass(frozen=True)
class Partition1D:
    """
    Half-open intervals along one axis, measured from `origin`: the first
    interval has `first_width`, then `pattern` repeats forever. Interval
    indices start at 1 at the origin.
    """

    origin: float
    first_width: float
    pattern: Tuple[float, ...]

    def __post_init__(self):
        if self.first_width <= 0 or not self.pattern or min(self.pattern) <= 0:
            raise ParameterError("partition widths must be positive")

    @property
    def period(self) -> float:
        return sum(self.pattern)

    def index(self, t: float) -> int:
        offset = t - self.origin
        if offset < self.first_width:
            return 1
        cycles, rest = divmod(offset - self.first_width, self.period)
        position = 0
        for width in self.pattern:
            if rest < width:
                break
            rest -= width
            position += 1
        # float rounding in divmod can leave `rest` a hair past the last width
        position = min(position, len(self.pattern) - 1)
        return 2 + int(cycles) * len(self.pattern) + position

    def bounds(self, index: int) -> Tuple[float, float]:
        if index == 1:
            return self.origin, self.origin + self.first_width
        cycles, position = divmod(index - 2, len(self.pattern))
        lo = self.origin + self.first_width + cycles * self.period + sum(self.pattern[:position])
        return lo, lo + self.pattern[position]

    @classmethod
    def uniform(cls, origin: float, width: float) -> "Partition1D":
        return cls(origin=origin, first_width=width, pattern=(width,))


class StripAxis(str, Enum):
    horizontal = "horizontal"
    vertical = "vertical"


@dataclass(frozen=True)
class CellGrid:
    """
    Strips across `strip_axis`, each cut into cells by the same partition.
    Horizontal strips stack along y and are cut along x; vertical strips the
    other way round.
    """

    origin: Tuple[float, float]
    strip_axis: StripAxis
    strips: Partition1D
    cells: Partition1D
    assignment: Dict[int, Tuple[int, int]] = field(repr=False)

    def members(self) -> Dict[Tuple[int, int], List[int]]:
        grouped = defaultdict(list)
        for point, key in sorted(self.assignment.items()):
            grouped[key].append(point)
        return dict(sorted(grouped.items()))

    def cell_box(self, strip: int, cell: int) -> Box:
        s_lo, s_hi = self.strips.bounds(strip)
        c_lo, c_hi = self.cells.bounds(cell)
        if self.strip_axis == StripAxis.horizontal:
            return Box(c_lo, s_lo, c_hi, s_hi)
        return Box(s_lo, c_lo, s_hi, c_hi)


def bounding_origin(coords: np.ndarray) -> Tuple[float, float]:
    if len(coords) == 0:
        return 0.0, 0.0
    return float(coords[:, 0].min()), float(coords[:, 1].min())


def build_grid(
    coords: np.ndarray,
    strip_axis: StripAxis,
    strips: Partition1D,
    cells: Partition1D,
) -> CellGrid:
    """
    Assign every point to exactly one (strip, cell) pair.

    Args:
        coords (np.ndarray): (n, 2) coordinates.
        strip_axis (StripAxis): Orientation of the strips.
        strips (Partition1D): Partition across the strips.
        cells (Partition1D): Partition along each strip.

    Returns:
        CellGrid: The grid with its point assignment.
    """
    if strip_axis == StripAxis.horizontal:
        across, along = coords[:, 1], coords[:, 0]
        origin = (cells.origin, strips.origin)
    else:
        across, along = coords[:, 0], coords[:, 1]
        origin = (strips.origin, cells.origin)
    assignment = {
        i: (strips.index(float(a)), cells.index(float(b)))
        for i, (a, b) in enumerate(zip(across, along))
    }
    return CellGrid(
        origin=origin,
        strip_axis=strip_axis,
        strips=strips,
        cells=cells,
        assignment=assignment,
    )


def square_grid(coords: np.ndarray, side: float) -> CellGrid:
    """Uniform horizontal strips of width `side`, cut into `side` x `side` squares."""
    if not math.isfinite(side) or side <= 0:
        raise ParameterError(f"cell side must be positive, got {side}")
    x0, y0 = bounding_origin(coords)
    return build_grid(
        coords,
        StripAxis.horizontal,
        Partition1D.uniform(y0, side),
        Partition1D.uniform(x0, side),
    )
