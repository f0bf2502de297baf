from typing import List

import numpy as np
from pydantic import BaseModel, ConfigDict, Field


class Point(BaseModel):
    model_config = ConfigDict(frozen=True)

    # unit = disk diameter
    x: float = Field(allow_inf_nan=False)
    y: float = Field(allow_inf_nan=False)


class Instance(BaseModel):
    """Points (index = vertex id) and the distance parameter d."""

    model_config = ConfigDict(frozen=True)

    points: List[Point]
    d: int = Field(ge=1)

    @property
    def n(self) -> int:
        return len(self.points)

    def coordinates(self) -> np.ndarray:
        if not self.points:
            return np.zeros((0, 2), dtype=float)
        return np.array([(p.x, p.y) for p in self.points], dtype=float)
