"""Coloring models."""

from typing import Dict, List, Optional, Sequence

from pydantic import BaseModel, Field, field_validator

from mvcolor.exceptions import InputError

MODES = ("proper", "defective1", "mv", "imv")


class Coloring(BaseModel):
    """Total map vertex -> color index; colors are 0-based."""

    assignment: List[int] = Field(..., description="Color of each vertex, by vertex index.")

    @field_validator("assignment")
    @classmethod
    def _non_negative(cls, value: List[int]) -> List[int]:
        if any(c < 0 for c in value):
            raise ValueError("colors must be non-negative")
        return value

    @classmethod
    def from_classes(cls, classes: Sequence[Sequence[int]], n: int) -> "Coloring":
        assignment = [-1] * n
        for color, members in enumerate(classes):
            for v in members:
                if not 0 <= v < n:
                    raise InputError(f"Vertex {v} out of range for n={n}")
                if assignment[v] >= 0:
                    raise InputError(f"Vertex {v} appears in two classes")
                assignment[v] = color
        missing = [v for v, c in enumerate(assignment) if c < 0]
        if missing:
            raise InputError(
                f"Coloring is not total: {len(missing)} uncolored vertices",
                details=f"first uncolored vertex: {missing[0]}",
            )
        return cls(assignment=assignment)

    @classmethod
    def constant(cls, n: int) -> "Coloring":
        return cls(assignment=[0] * n)

    @property
    def n(self) -> int:
        return len(self.assignment)

    @property
    def k(self) -> int:
        return len({c for c in self.assignment})

    def classes(self) -> List[List[int]]:
        """Non-empty classes in increasing color order."""
        by_color: Dict[int, List[int]] = {}
        for v, c in enumerate(self.assignment):
            by_color.setdefault(c, []).append(v)
        return [by_color[c] for c in sorted(by_color)]

    def normalized(self) -> "Coloring":
        """Renumber colors 0..k-1, dropping unused ones and keeping their order."""
        remap = {c: i for i, c in enumerate(sorted(set(self.assignment)))}
        return Coloring(assignment=[remap[c] for c in self.assignment])

    def sorted_classes(self) -> List[List[int]]:
        """Classes as sorted vertex lists, ordered by smallest member."""
        return sorted(self.classes(), key=lambda members: members[0])

    def canonical(self) -> "Coloring":
        """Colors renumbered in order of first appearance."""
        return Coloring.from_classes(self.sorted_classes(), self.n)


class ColoringViolation(BaseModel):
    """First class of a coloring that fails its mode."""

    color: int
    reason: str
    vertices: List[int] = Field(default_factory=list)


class ValidationReport(BaseModel):
    mode: str
    valid: bool
    k: int
    violation: Optional[ColoringViolation] = None


class ConstructedColoring(BaseModel):
    """A coloring produced by a closed-form construction."""

    coloring: Coloring
    source: str = Field(..., description="Construction tag, e.g. 'cycle-imv'.")
    mode: str = Field(..., description="Mode the construction guarantees (mv or imv).")
    claimed_k: int
    notes: Dict[str, int] = Field(default_factory=dict)
    anomaly: Optional[str] = None

    @property
    def k(self) -> int:
        return self.coloring.k
