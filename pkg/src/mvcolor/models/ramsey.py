"""Edge partition models."""

from typing import List, Tuple

from pydantic import BaseModel, Field


class EdgePartition(BaseModel):
    """Partition of the edges of K_n or K_{r,s} into labelled classes.

    Host ``complete`` uses vertices ``0..n-1``; host ``biclique`` puts the ``r`` side
    on ``0..r-1`` and the ``s`` side on ``r..r+s-1``.
    """

    host: str = Field(..., description="'complete' or 'biclique'.")
    sizes: List[int] = Field(..., description="[n] or [r, s].")
    forbidden: str = Field(..., description="'K4' or 'C4'.")
    edges: List[Tuple[int, int, int]] = Field(
        default_factory=list, description="(u, v, class) triples with u < v."
    )

    @property
    def order(self) -> int:
        return sum(self.sizes)

    @property
    def num_classes(self) -> int:
        return len({c for _, _, c in self.edges})

    @property
    def host_spec(self) -> str:
        return f"{self.host}:{','.join(str(s) for s in self.sizes)}"

    def class_edges(self, label: int) -> List[Tuple[int, int]]:
        return [(u, v) for u, v, c in self.edges if c == label]

    def labels(self) -> List[int]:
        return sorted({c for _, _, c in self.edges})


class SandwichReport(BaseModel):
    """ρ against the exact MV and IMV chromatic numbers of the subdivided host.

    The full chain ρ ≤ χ_μ ≤ χ_μᵢ ≤ ρ + 1 is asserted unless ``upper_asserted`` is off;
    stars K_{1,s} only keep the lower chain, since S(K_{1,2}) = P_5 has χ_μ = 3.
    """

    host: str
    rho: int
    chi_mu: int
    chi_mu_i: int
    upper_asserted: bool = Field(True, description="Whether χ_μᵢ ≤ ρ + 1 is part of the claim.")

    @property
    def lower_holds(self) -> bool:
        return self.rho <= self.chi_mu <= self.chi_mu_i

    @property
    def upper_holds(self) -> bool:
        return self.chi_mu_i <= self.rho + 1

    @property
    def holds(self) -> bool:
        return self.lower_holds and (self.upper_holds or not self.upper_asserted)

    @property
    def meets_rho_plus_one(self) -> bool:
        return self.chi_mu_i == self.rho + 1
