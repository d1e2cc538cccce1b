"""CNF formula model."""

from typing import List

from pydantic import BaseModel, Field, model_validator


class Cnf3(BaseModel):
    """CNF with clauses of one to three literals over variables ``1..num_vars``.

    A literal is a signed variable index: ``3`` is u3, ``-3`` is its negation.
    """

    num_vars: int = Field(..., ge=1)
    clauses: List[List[int]] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_clauses(self) -> "Cnf3":
        for j, clause in enumerate(self.clauses, start=1):
            if not 1 <= len(clause) <= 3:
                raise ValueError(f"clause {j} has {len(clause)} literals, expected 1 to 3")
            if len(set(clause)) != len(clause):
                raise ValueError(f"clause {j} repeats a literal")
            for lit in clause:
                if lit == 0 or abs(lit) > self.num_vars:
                    raise ValueError(f"clause {j} uses unknown literal {lit}")
                if -lit in clause:
                    raise ValueError(f"clause {j} is tautological in variable {abs(lit)}")
        return self

    @property
    def num_clauses(self) -> int:
        return len(self.clauses)

    @property
    def literal_occurrences(self) -> int:
        return sum(len(c) for c in self.clauses)

    def satisfied_by(self, assignment: List[bool]) -> bool:
        """``assignment[i]`` is the value of variable ``i + 1``."""
        return all(any(assignment[abs(lit) - 1] == (lit > 0) for lit in c) for c in self.clauses)
