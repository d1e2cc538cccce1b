"""Graph corpora for exhaustive and sampled property checks."""

import random
from itertools import combinations
from typing import Iterator, List

import networkx as nx

from mvcolor.builders.families import random_tree
from mvcolor.core.graph import Graph
from mvcolor.exceptions import InputError

# networkx ships every graph on at most seven vertices
ATLAS_MAX_ORDER = 7


def all_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    """Every graph with ``min_n <= n <= max_n`` up to isomorphism."""
    if max_n > ATLAS_MAX_ORDER:
        raise InputError(f"The graph atlas stops at {ATLAS_MAX_ORDER} vertices, got {max_n}")
    for i, nxg in enumerate(nx.graph_atlas_g()):
        n = nxg.number_of_nodes()
        if max(min_n, 1) <= n <= max_n:
            yield Graph.from_networkx(nxg, name=f"atlas:{i}")


def connected_graphs(max_n: int, min_n: int = 1) -> Iterator[Graph]:
    return (g for g in all_graphs(max_n, min_n) if g.is_connected())


def random_connected_graph(seed: int, n: int, p: float = 0.4) -> Graph:
    """G(n, p) sample whose components are chained together when it is disconnected."""
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    rng = random.Random(seed)
    nxg = nx.gnp_random_graph(n, p, seed=rng.randrange(2**32))
    components = [sorted(c) for c in nx.connected_components(nxg)]
    for left, right in zip(components, components[1:]):
        nxg.add_edge(rng.choice(left), rng.choice(right))
    return Graph(n, nxg.edges(), name=f"gnp:{seed},{n}")


def random_triangle_free(seed: int, n: int, p: float = 0.3) -> Graph:
    """A random tree on ``n`` vertices plus random edges that close no triangle."""
    tree = random_tree(seed, n)
    rng = random.Random(seed + 1)
    rows = list(tree.rows)
    edges = list(tree.edges())
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        if rows[u] >> v & 1 or rows[u] & rows[v] or rng.random() >= p:
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        edges.append((u, v))
    return Graph(n, edges, name=f"tfree:{seed},{n}")


def sampled_graphs(count: int, max_n: int, seed: int = 0, min_n: int = 2) -> List[Graph]:
    """``count`` seeded connected graphs with orders spread over ``min_n..max_n``."""
    rng = random.Random(seed)
    graphs = []
    for i in range(count):
        n = rng.randint(min_n, max_n)
        graphs.append(random_connected_graph(seed * 100003 + i, n, rng.uniform(0.2, 0.7)))
    return graphs
