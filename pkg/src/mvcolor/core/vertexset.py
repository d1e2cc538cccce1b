"""Vertex subsets stored as bitsets."""

from dataclasses import dataclass
from typing import Iterable, Iterator, List

from mvcolor.core.bits import iter_bits, mask_of, popcount
from mvcolor.exceptions import InputError


@dataclass(frozen=True)
class VertexSet:
    """Subset of ``0..n-1``; ``n`` is the order of the owning graph."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise InputError(f"Vertex set has members outside 0..{self.n - 1}")

    @classmethod
    def from_iter(cls, vertices: Iterable[int], n: int) -> "VertexSet":
        vertices = list(vertices)
        for v in vertices:
            if not 0 <= v < n:
                raise InputError(f"Vertex {v} out of range for n={n}")
        return cls(mask_of(vertices), n)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(0, n)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls((1 << n) - 1, n)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.bits >> v & 1)

    def __or__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits | other.bits, max(self.n, other.n))

    def __and__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & other.bits, max(self.n, other.n))

    def __sub__(self, other: "VertexSet") -> "VertexSet":
        return VertexSet(self.bits & ~other.bits, self.n)

    def add(self, v: int) -> "VertexSet":
        return VertexSet.from_iter([*self, v], self.n)

    def complement(self) -> "VertexSet":
        return VertexSet(((1 << self.n) - 1) & ~self.bits, self.n)

    def issubset(self, other: "VertexSet") -> bool:
        return self.bits & ~other.bits == 0

    def to_list(self) -> List[int]:
        return list(iter_bits(self.bits))

    def __repr__(self) -> str:
        return f"VertexSet({self.to_list()})"
