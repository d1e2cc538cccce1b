"""Solver result models."""

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, Field, computed_field


class VisibilityWitness(BaseModel):
    """A u,v-geodesic whose internal vertices avoid the queried set."""

    pair: List[int] = Field(..., min_length=2, max_length=2)
    path: List[int] = Field(..., description="Full geodesic from pair[0] to pair[1].")

    @property
    def interior(self) -> List[int]:
        return self.path[1:-1]

    @property
    def length(self) -> int:
        return len(self.path) - 1


class InvariantResult(BaseModel):
    """An exact maximum together with a set attaining it."""

    name: str
    value: int
    witness: List[int] = Field(default_factory=list)
    nodes: int = 0


class Bound(BaseModel):
    value: int
    source: str = Field(..., description="Which bound produced the value.")


class BoundReport(BaseModel):
    """Best lower and upper bound with the bounds that produced them."""

    lower: Bound
    upper: Bound
    lower_candidates: List[Bound] = Field(default_factory=list)
    upper_candidates: List[Bound] = Field(default_factory=list)


class ResultRecord(BaseModel):
    """Machine-readable output of one CLI command."""

    command: str
    request: Dict[str, Any] = Field(default_factory=dict)
    values: Dict[str, Any] = Field(default_factory=dict)
    provenance: Dict[str, str] = Field(
        default_factory=dict, description="exact | constructed | bound, per value."
    )
    witnesses: Dict[str, Any] = Field(default_factory=dict)
    elapsed_seconds: float = 0.0
    budget: Dict[str, Optional[int]] = Field(default_factory=dict)
    status: str = "ok"


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class SuiteReport(BaseModel):
    """Outcome of one verification suite."""

    suite: str
    checks: List[CheckResult] = Field(default_factory=list)
    elapsed_seconds: float = 0.0

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> List[CheckResult]:
        return [c for c in self.checks if not c.passed]
