from typing import Optional

from pydantic import BaseModel, model_validator

from schemas.solution import ProblemKind


class BenchRecord(BaseModel):
    instance_id: str
    n: int
    d: int
    k: Optional[int] = None
    algorithm: str
    problem: ProblemKind
    value: int
    oracle: Optional[int] = None
    ratio: Optional[float] = None
    wall_ms: Optional[float] = None
    feasible: bool

    @model_validator(mode="after")
    def check_ratio(self) -> "BenchRecord":
        if (self.ratio is None) != (self.oracle is None):
            raise ValueError("ratio must be present exactly when the oracle value is")
        return self
