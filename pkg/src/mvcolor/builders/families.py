"""Named graph families."""

import random
from itertools import combinations
from typing import List, Sequence

import networkx as nx

from mvcolor.core.graph import Graph
from mvcolor.exceptions import InputError


def _require(condition: bool, message: str) -> None:
    if not condition:
        raise InputError(message)


def path_graph(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)], name=f"path:{n}")


def cycle_graph(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)], name=f"cycle:{n}")


def complete_graph(n: int) -> Graph:
    _require(n >= 1, f"complete needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2), name=f"complete:{n}")


def empty_graph(n: int) -> Graph:
    _require(n >= 1, f"empty needs n >= 1, got {n}")
    return Graph(n, name=f"empty:{n}")


def biclique(r: int, s: int) -> Graph:
    """K_{r,s} with the r-side on 0..r-1 and the s-side on r..r+s-1."""
    _require(r >= 1 and s >= 1, f"biclique needs r, s >= 1, got {r},{s}")
    return Graph(r + s, [(a, r + b) for a in range(r) for b in range(s)], name=f"biclique:{r},{s}")


def star(n: int) -> Graph:
    """K_{1,n}; the center is vertex 0."""
    _require(n >= 1, f"star needs n >= 1 leaves, got {n}")
    g = biclique(1, n)
    return Graph(g.n, g.edges(), name=f"star:{n}")


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return Graph(10, outer + inner + spokes, name="petersen")


def random_tree(seed: int, n: int) -> Graph:
    """Tree on ``n`` vertices decoded from a seeded random Prüfer sequence."""
    _require(n >= 1, f"tree needs n >= 1, got {n}")
    name = f"tree:{seed},{n}"
    if n == 1:
        return Graph(1, name=name)
    rng = random.Random(seed)
    sequence = [rng.randrange(n) for _ in range(n - 2)]
    return Graph(n, nx.from_prufer_sequence(sequence).edges(), name=name)


def trees_of_order(n: int) -> List[Graph]:
    """All non-isomorphic trees on ``n`` vertices."""
    _require(n >= 1, f"trees need n >= 1, got {n}")
    if n == 1:
        return [Graph(1, name="tree:1")]
    return [
        Graph.from_networkx(t, name=f"tree:{n}#{i}")
        for i, t in enumerate(nx.nonisomorphic_trees(n))
    ]


def sharpness_gadget(k: int, r: int) -> Graph:
    """P_{2k-1} ⊙ empty:r plus a vertex joined to the k-th copy of empty:r.

    Path vertices are ``0..2k-2``; the copy hanging at path vertex ``i`` occupies
    ``2k-1 + i*r .. 2k-1 + (i+1)*r - 1``; the extra vertex is last.
    """
    _require(k >= 1 and r >= 2, f"sharpness gadget needs k >= 1 and r >= 2, got k={k}, r={r}")
    p = 2 * k - 1
    edges = [(i, i + 1) for i in range(p - 1)]
    for i in range(p):
        edges.extend((i, p + i * r + j) for j in range(r))
    extra = p + p * r
    edges.extend((p + (k - 1) * r + j, extra) for j in range(r))
    labels: List[str] = [f"u{i + 1}" for i in range(p)]
    labels += [f"u{i + 1}/{j}" for i in range(p) for j in range(r)]
    labels.append("u")
    return Graph(extra + 1, edges, labels=labels, name=f"sharpness:{k},{r}")


def hamming_dims_ok(dims: Sequence[int]) -> None:
    _require(len(dims) >= 1, "hamming needs at least one dimension")
    _require(all(d >= 1 for d in dims), f"hamming dimensions must be >= 1, got {list(dims)}")
