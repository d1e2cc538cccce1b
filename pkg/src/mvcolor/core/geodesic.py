"""Distances, geodesic counts, intervals and convexity."""

import logging
import threading
import weakref
from collections import deque
from dataclasses import dataclass
from typing import List, Tuple, Union

import numpy as np

from mvcolor.core.bits import iter_bits
from mvcolor.core.graph import Graph
from mvcolor.core.vertexset import VertexSet
from mvcolor.exceptions import DisconnectedGraphError

logger = logging.getLogger(__name__)

INFINITE = 2**31 - 1

SetLike = Union[VertexSet, int]


def _mask(s: SetLike) -> int:
    return s.bits if isinstance(s, VertexSet) else s


class GeodesicIndex:
    """All-pairs BFS data of one graph.

    ``spheres[u][k]`` is the bitset of vertices at distance exactly ``k`` from ``u``.
    """

    def __init__(self, g: Graph):
        self.n = g.n
        self.dist: List[List[int]] = []
        self.sigma: List[List[int]] = []
        self.spheres: List[List[int]] = []
        for source in range(g.n):
            dist, sigma, spheres = self._bfs(g, source)
            self.dist.append(dist)
            self.sigma.append(sigma)
            self.spheres.append(spheres)

    @staticmethod
    def _bfs(g: Graph, source: int) -> Tuple[List[int], List[int], List[int]]:
        dist = [INFINITE] * g.n
        sigma = [0] * g.n
        dist[source] = 0
        sigma[source] = 1
        spheres = [1 << source]
        queue = deque([source])
        while queue:
            v = queue.popleft()
            for w in g.adjacency[v]:
                if dist[w] == INFINITE:
                    dist[w] = dist[v] + 1
                    if dist[w] == len(spheres):
                        spheres.append(0)
                    spheres[dist[w]] |= 1 << w
                    queue.append(w)
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
        return dist, sigma, spheres

    def distance(self, u: int, v: int) -> int:
        return self.dist[u][v]

    def sphere(self, u: int, k: int) -> int:
        layers = self.spheres[u]
        return layers[k] if 0 <= k < len(layers) else 0

    def interval_mask(self, u: int, v: int) -> int:
        d = self.dist[u][v]
        if d == INFINITE:
            raise DisconnectedGraphError(f"Vertices {u} and {v} are not connected")
        mask = 0
        for k in range(d + 1):
            mask |= self.sphere(u, k) & self.sphere(v, d - k)
        return mask

    def eccentricity(self, u: int) -> int:
        return max(self.dist[u])


_cache: "weakref.WeakKeyDictionary[Graph, GeodesicIndex]" = weakref.WeakKeyDictionary()
_cache_lock = threading.Lock()


def geodesic_index(g: Graph) -> GeodesicIndex:
    """Shared per-graph :class:`GeodesicIndex` (built on first use)."""
    with _cache_lock:
        index = _cache.get(g)
    if index is None:
        logger.debug("building geodesic index for %r", g)
        index = GeodesicIndex(g)
        with _cache_lock:
            _cache[g] = index
    return index


@dataclass(frozen=True)
class DistanceMatrix:
    d: np.ndarray

    def __call__(self, u: int, v: int) -> int:
        return int(self.d[u, v])


@dataclass(frozen=True)
class GeodesicCounts:
    sigma: np.ndarray

    def __call__(self, u: int, v: int) -> int:
        return int(self.sigma[u, v])


def bfs_all_pairs(g: Graph) -> Tuple[DistanceMatrix, GeodesicCounts]:
    """Hop distances (``INFINITE`` across components) and geodesic multiplicities."""
    index = geodesic_index(g)
    d = np.array(index.dist, dtype=np.int64).reshape(g.n, g.n)
    # counts grow exponentially on grid-like graphs
    sigma = np.array(index.sigma, dtype=object).reshape(g.n, g.n)
    return DistanceMatrix(d), GeodesicCounts(sigma)


def require_connected(g: Graph, what: str = "This operation") -> None:
    if not g.is_connected():
        raise DisconnectedGraphError(
            f"{what} requires a connected graph",
            details=f"{g!r} has {len(g.components())} components",
        )


def interval(g: Graph, u: int, v: int) -> VertexSet:
    """Vertices lying on some u,v-geodesic."""
    return VertexSet(geodesic_index(g).interval_mask(u, v), g.n)


def is_convex(g: Graph, s: SetLike) -> bool:
    """Every geodesic of ``g`` between members of ``s`` stays inside ``s``.

    Distances and geodesic counts of the induced subgraph must agree with those of ``g``.
    """
    members = list(iter_bits(_mask(s)))
    if len(members) <= 1:
        return True
    whole = geodesic_index(g)
    sub, _ = g.induced_subgraph(members)
    part = geodesic_index(sub)
    for i, u in enumerate(members):
        for j in range(i + 1, len(members)):
            v = members[j]
            if part.dist[i][j] != whole.dist[u][v] or part.sigma[i][j] != whole.sigma[u][v]:
                return False
    return True


def diameter(g: Graph) -> int:
    require_connected(g, "diameter")
    if g.n == 0:
        return 0
    index = geodesic_index(g)
    return max(index.eccentricity(u) for u in range(g.n))


def geodesic_path(g: Graph, u: int, v: int, avoid: int = 0) -> List[int]:
    """One u,v-geodesic whose internal vertices avoid ``avoid``; empty if none exists.

    Layer k of the search is restricted to the vertices at distance k from ``u``
    and ``d(u,v)-k`` from ``v``, so any path found is a geodesic of ``g``.
    """
    index = geodesic_index(g)
    d = index.dist[u][v]
    if d == INFINITE:
        raise DisconnectedGraphError(f"Vertices {u} and {v} are not connected")
    if d <= 1:
        return [u, v] if d == 1 else [u]
    layers = [1 << u]
    frontier = 1 << u
    for k in range(1, d):
        reach = 0
        for w in iter_bits(frontier):
            reach |= g.rows[w]
        frontier = reach & index.sphere(u, k) & index.sphere(v, d - k) & ~avoid
        if not frontier:
            return []
        layers.append(frontier)
    # some vertex in the last layer is adjacent to v; walk back
    path = [v]
    current = v
    for k in range(d - 1, -1, -1):
        step = g.rows[current] & layers[k]
        current = (step & -step).bit_length() - 1
        path.append(current)
    path.reverse()
    return path


def longest_convex_path(g: Graph) -> int:
    """Vertex count of a longest convex path.

    A path is convex exactly when it is the unique geodesic between its ends, so
    the value is one more than the largest distance realised by a single geodesic.
    """
    return len(longest_convex_path_witness(g))


def longest_convex_path_witness(g: Graph) -> List[int]:
    require_connected(g, "longest_convex_path")
    if g.n == 0:
        return []
    index = geodesic_index(g)
    best = (0, 0, 0)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if index.sigma[u][v] == 1 and index.dist[u][v] > best[0]:
                best = (index.dist[u][v], u, v)
    _, u, v = best
    return geodesic_path(g, u, v)


def diag(g: Graph, h: Graph) -> int:
    """Largest convex path of the strong product ``g ⊠ h`` along its diagonal."""
    return min(longest_convex_path(g), longest_convex_path(h))
