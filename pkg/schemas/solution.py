from enum import Enum
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator


class ProblemKind(str, Enum):
    independent_set = "is"
    dominating_set = "ds"


class Solution(BaseModel):
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    kind: ProblemKind = Field(alias="problem")
    d: int = Field(ge=1)
    algorithm: str
    selected: List[int]
    value: int
    stats: Dict[str, Union[int, float, str]] = Field(default_factory=dict, exclude=True)

    @model_validator(mode="after")
    def check_selection(self) -> "Solution":
        if self.value != len(self.selected):
            raise ValueError(
                f"value {self.value} does not match {len(self.selected)} selected points"
            )
        if any(i < 0 for i in self.selected):
            raise ValueError("selected indices must be non-negative")
        if any(a >= b for a, b in zip(self.selected, self.selected[1:])):
            raise ValueError("selected indices must be strictly ascending")
        return self

    @classmethod
    def build(
        cls,
        kind: ProblemKind,
        selected,
        d: int,
        algorithm: str,
        stats: Optional[Dict[str, Union[int, float, str]]] = None,
    ) -> "Solution":
        chosen = sorted(set(int(i) for i in selected))
        return cls(
            kind=kind,
            d=d,
            algorithm=algorithm,
            selected=chosen,
            value=len(chosen),
            stats=stats or {},
        )


class VerificationReport(BaseModel):
    class Violation(BaseModel):
        # IS: the offending pair; DS: the undominated point alone
        points: List[int]
        hop: Optional[int]
        message: str

    kind: ProblemKind
    d: int
    feasible: bool
    violations: List["VerificationReport.Violation"]
