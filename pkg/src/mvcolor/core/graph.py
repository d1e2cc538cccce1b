"""Immutable simple undirected graphs over dense 0-based vertex indices."""

from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from mvcolor.core.bits import iter_bits, mask_of, popcount
from mvcolor.exceptions import InputError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class ProductInfo:
    """Factor bookkeeping of a product graph.

    Vertex ``(g, h)`` of the product has index ``g * right.n + h`` (row-major, g outer).
    """

    kind: str
    left: "Graph"
    right: "Graph"

    def index(self, g: int, h: int) -> int:
        return g * self.right.n + h

    def coordinates(self, v: int) -> Tuple[int, int]:
        return divmod(v, self.right.n)


class Graph:
    """Simple undirected graph with adjacency lists and adjacency bitrows.

    Instances are never mutated after construction; derived data (distances,
    geodesic counts) lives in :mod:`mvcolor.core.geodesic`.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[Edge] = (),
        labels: Optional[Sequence[str]] = None,
        name: str = "",
        product: Optional[ProductInfo] = None,
        tags: Iterable[str] = (),
    ):
        if n < 0:
            raise InputError(f"Vertex count must be non-negative, got {n}")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"Edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"Self-loop at vertex {u}", suggestion="Graphs must be simple")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if labels is not None and len(labels) != n:
            raise InputError(f"Expected {n} labels, got {len(labels)}")

        self.n = n
        self.rows: Tuple[int, ...] = tuple(rows)
        self.adjacency: Tuple[Tuple[int, ...], ...] = tuple(tuple(iter_bits(r)) for r in rows)
        self.labels: Optional[Tuple[str, ...]] = tuple(labels) if labels is not None else None
        self.name = name
        self.product = product
        self.tags: FrozenSet[str] = frozenset(tags)

    def __repr__(self) -> str:
        title = self.name or "Graph"
        return f"<{title} n={self.n} m={self.m}>"

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], **kwargs) -> "Graph":
        return cls(n, edges, **kwargs)

    @classmethod
    def from_networkx(cls, nxg: nx.Graph, name: str = "") -> "Graph":
        """Relabel a networkx graph onto 0..n-1 in sorted node order."""
        nodes = sorted(nxg.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        edges = [(index[a], index[b]) for a, b in nxg.edges() if a != b]
        return cls(len(nodes), edges, labels=[str(node) for node in nodes], name=name)

    def to_networkx(self) -> nx.Graph:
        nxg = nx.Graph()
        nxg.add_nodes_from(range(self.n))
        nxg.add_edges_from(self.edges())
        return nxg

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> List[Edge]:
        """All edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def degree_order(self) -> List[int]:
        """Vertices by descending degree, lowest index first among ties."""
        return sorted(range(self.n), key=lambda v: (-len(self.adjacency[v]), v))

    def component_mask(self, v: int) -> int:
        seen = frontier = 1 << v
        while frontier:
            reach = 0
            for u in iter_bits(frontier):
                reach |= self.rows[u]
            frontier = reach & ~seen
            seen |= frontier
        return seen

    def components(self) -> List[int]:
        left = self.full_mask
        parts = []
        while left:
            comp = self.component_mask((left & -left).bit_length() - 1)
            parts.append(comp)
            left &= ~comp
        return parts

    def is_connected(self) -> bool:
        return self.n <= 1 or self.component_mask(0) == self.full_mask

    def bipartition(self) -> Optional[Tuple[int, int]]:
        """Return the two colour-class masks of a proper 2-colouring, or None."""
        side = [-1] * self.n
        for start in range(self.n):
            if side[start] >= 0:
                continue
            side[start] = 0
            stack = [start]
            while stack:
                u = stack.pop()
                for w in self.adjacency[u]:
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        stack.append(w)
                    elif side[w] == side[u]:
                        return None
        return (
            mask_of(v for v in range(self.n) if side[v] == 0),
            mask_of(v for v in range(self.n) if side[v] == 1),
        )

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def find_triangle(self) -> Optional[Tuple[int, int, int]]:
        for u, v in self.edges():
            common = self.rows[u] & self.rows[v]
            if common:
                w = (common & -common).bit_length() - 1
                return tuple(sorted((u, v, w)))  # type: ignore[return-value]
        return None

    def is_clique(self, mask: int) -> bool:
        return all(self.rows[v] & mask == mask & ~(1 << v) for v in iter_bits(mask))

    def is_independent(self, mask: int) -> bool:
        return all(not self.rows[v] & mask for v in iter_bits(mask))

    def is_complete(self) -> bool:
        return self.is_clique(self.full_mask)

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", List[int]]:
        """Induced subgraph plus the map from new indices to original vertices."""
        keep = sorted(set(vertices))
        index: Dict[int, int] = {v: i for i, v in enumerate(keep)}
        edges = [
            (index[u], index[w]) for u in keep for w in self.adjacency[u] if w in index and u < w
        ]
        labels = [self.label(v) for v in keep]
        return Graph(len(keep), edges, labels=labels, name=f"{self.name}[induced]"), keep

    def complement(self) -> "Graph":
        full = self.full_mask
        edges = [
            (u, w)
            for u in range(self.n)
            for w in iter_bits(full & ~self.rows[u] & ~((1 << (u + 1)) - 1))
        ]
        return Graph(self.n, edges, labels=self.labels, name=f"complement({self.name})")

    def same_edges(self, other: "Graph") -> bool:
        return self.n == other.n and self.rows == other.rows

    def mask_size(self, mask: int) -> int:
        return popcount(mask)

    def __iter__(self) -> Iterator[int]:
        return iter(range(self.n))
