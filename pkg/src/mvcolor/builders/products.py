"""Graph products, corona and subdivision.

Product vertex ``(g, h)`` has index ``g * n(H) + h`` and label ``"(g,h)"``.
"""

import math
from typing import Callable, List, Sequence, Tuple

import networkx as nx

from mvcolor.builders.families import complete_graph, hamming_dims_ok
from mvcolor.core.graph import Graph, ProductInfo
from mvcolor.core.vertexset import VertexSet
from mvcolor.exceptions import PreconditionError, ScaleLimitError

MAX_ORDER = 10**6


def check_order(n: int, what: str) -> None:
    if n > MAX_ORDER:
        raise ScaleLimitError(f"{what} would have {n} vertices (limit {MAX_ORDER})")


def _product(
    g: Graph, h: Graph, kind: str, adjacent: Callable[[int, int, int, int], bool]
) -> Graph:
    check_order(g.n * h.n, f"{kind} product")
    info = ProductInfo(kind=kind, left=g, right=h)
    order = [(a, b) for a in range(g.n) for b in range(h.n)]
    edges = []
    for (a, b) in order:
        for c in range(a, g.n):
            for d in range(h.n):
                if (c, d) <= (a, b):
                    continue
                if adjacent(a, b, c, d):
                    edges.append((info.index(a, b), info.index(c, d)))
    labels = [f"({g.label(a)},{h.label(b)})" for a, b in order]
    tags = []
    if kind == "lex" and (g.n == 1 or any(g.degree(v) == 0 for v in g)):
        tags.append("isolated-left-factor")
    return Graph(
        g.n * h.n,
        edges,
        labels=labels,
        name=f"{kind}({g.name},{h.name})",
        product=info,
        tags=tags,
    )


def cartesian(g: Graph, h: Graph) -> Graph:
    return _product(
        g,
        h,
        "cartesian",
        lambda a, b, c, d: (a == c and h.has_edge(b, d)) or (b == d and g.has_edge(a, c)),
    )


def strong(g: Graph, h: Graph) -> Graph:
    def adjacent(a: int, b: int, c: int, d: int) -> bool:
        close_g = a == c or g.has_edge(a, c)
        close_h = b == d or h.has_edge(b, d)
        return close_g and close_h

    return _product(g, h, "strong", adjacent)


def lex(g: Graph, h: Graph) -> Graph:
    return _product(
        g, h, "lex", lambda a, b, c, d: g.has_edge(a, c) or (a == c and h.has_edge(b, d))
    )


def direct(g: Graph, h: Graph) -> Graph:
    return _product(g, h, "direct", lambda a, b, c, d: g.has_edge(a, c) and h.has_edge(b, d))


def hamming(dims: Sequence[int]) -> Graph:
    """K_{d1} □ ... □ K_{dk}, folded left to right."""
    hamming_dims_ok(dims)
    check_order(math.prod(dims), "hamming graph")
    g = complete_graph(dims[0])
    for d in dims[1:]:
        g = cartesian(g, complete_graph(d))
    return Graph(
        g.n,
        g.edges(),
        labels=g.labels,
        name=f"hamming:{','.join(str(d) for d in dims)}",
        product=g.product,
    )


def corona(g: Graph, h: Graph) -> Graph:
    """G ⊙ H: vertex ``v`` of G is joined to every vertex of its own copy of H.

    G keeps indices ``0..n(G)-1``; the copy owned by ``v`` starts at ``n(G) + v*n(H)``.
    """
    n = g.n * (1 + h.n)
    check_order(n, "corona")
    edges = list(g.edges())
    labels = [g.label(v) for v in g]
    for v in g:
        base = g.n + v * h.n
        edges.extend((v, base + j) for j in h)
        edges.extend((base + a, base + b) for a, b in h.edges())
        labels.extend(f"{h.label(j)}@{g.label(v)}" for j in h)
    return Graph(n, edges, labels=labels, name=f"corona({g.name},{h.name})", tags=["corona"])


def corona_copy(g: Graph, h: Graph, owner: int) -> List[int]:
    """Vertices of the copy of H attached to ``owner`` in ``corona(g, h)``."""
    base = g.n + owner * h.n
    return list(range(base, base + h.n))


def subdivision(g: Graph) -> Graph:
    """S(G): edge ``i`` of G (lexicographic order) becomes vertex ``n(G) + i``."""
    edges_g = g.edges()
    n = g.n + len(edges_g)
    check_order(n, "subdivision")
    edges: List[Tuple[int, int]] = []
    labels = [g.label(v) for v in g]
    for i, (u, v) in enumerate(edges_g):
        edges.append((u, g.n + i))
        edges.append((v, g.n + i))
        labels.append(f"e_{{{g.label(u)},{g.label(v)}}}")
    return Graph(n, edges, labels=labels, name=f"subdivision({g.name})", tags=["subdivision"])


def subdivision_vertex(g: Graph, u: int, v: int) -> int:
    """Index in ``subdivision(g)`` of the vertex subdividing edge ``uv``."""
    key = (min(u, v), max(u, v))
    return g.n + g.edges().index(key)


def factors(g: Graph) -> Tuple[Graph, Graph]:
    if g.product is None:
        raise PreconditionError(f"{g!r} was not built as a product")
    return g.product.left, g.product.right


def coordinates(g: Graph, v: int) -> Tuple[int, int]:
    if g.product is None:
        raise PreconditionError(f"{g!r} was not built as a product")
    return g.product.coordinates(v)


def fiber(g: Graph, which: str, at: int) -> VertexSet:
    """``which="G"``: the G-fiber G^h at ``h=at``; ``which="H"``: the H-fiber ᵍH at ``g=at``."""
    left, right = factors(g)
    info = g.product
    assert info is not None
    if which == "G":
        if not 0 <= at < right.n:
            raise PreconditionError(f"No G-fiber at h={at}")
        return VertexSet.from_iter((info.index(a, at) for a in left), g.n)
    if which == "H":
        if not 0 <= at < left.n:
            raise PreconditionError(f"No H-fiber at g={at}")
        return VertexSet.from_iter((info.index(at, b) for b in right), g.n)
    raise PreconditionError(f"Fiber kind must be 'G' or 'H', got {which!r}")


def is_isomorphic(a: Graph, b: Graph) -> bool:
    if a.n != b.n or a.m != b.m:
        return False
    return nx.is_isomorphic(a.to_networkx(), b.to_networkx())
