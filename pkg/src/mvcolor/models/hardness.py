"""Reports produced by the reduction validators."""

from typing import List, Optional

from pydantic import BaseModel, Field


class GadgetCheck(BaseModel):
    """Structural self-check of a SAT gadget against its construction formulas."""

    order: int
    expected_order: int
    size: int
    expected_size: int
    diameter: int

    @property
    def ok(self) -> bool:
        return (
            self.order == self.expected_order
            and self.size == self.expected_size
            and self.diameter == 4
        )


class SatReductionReport(BaseModel):
    """Both sides of ``SAT(f) <=> mu_i(G) = alpha(G)`` for one formula."""

    num_vars: int
    num_clauses: int
    satisfiable: bool
    assignment: Optional[List[bool]] = None
    alpha: int
    mu_i: int
    alpha_witness: List[int] = Field(default_factory=list)
    mu_i_witness: List[int] = Field(default_factory=list)
    imv_from_assignment: List[int] = Field(
        default_factory=list, description="The set built from the satisfying assignment."
    )
    extension: bool = Field(False, description="Some clause has fewer than three literals.")
    gadget: GadgetCheck

    @property
    def holds(self) -> bool:
        return self.satisfiable == (self.mu_i == self.alpha)


class CoronaReport(BaseModel):
    """IMV parameters of K_1 ⊙ H against α(H) and χ(H)."""

    order: int
    alpha: int
    chi: int
    mu_i: int
    chi_mu_i: int

    @property
    def holds(self) -> bool:
        return self.mu_i == self.alpha and self.chi_mu_i == self.chi + 1
