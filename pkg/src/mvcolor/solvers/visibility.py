"""Mutual-visibility tests and exact set invariants (μ, μᵢ, α, ω)."""

import logging
from typing import Dict, List, Optional, Tuple, Union

from mvcolor.core.bits import bits_to_list, iter_bits, mask_of, popcount
from mvcolor.core.budget import NodeBudget, as_budget
from mvcolor.core.geodesic import diameter, geodesic_index, geodesic_path, require_connected
from mvcolor.core.graph import Graph
from mvcolor.core.vertexset import VertexSet
from mvcolor.exceptions import PreconditionError
from mvcolor.models.results import InvariantResult, VisibilityWitness

logger = logging.getLogger(__name__)

SetLike = Union[VertexSet, int, List[int]]
Budget = Union[NodeBudget, int, None]


def to_mask(x: SetLike) -> int:
    if isinstance(x, VertexSet):
        return x.bits
    if isinstance(x, int):
        return x
    return mask_of(x)


def is_visible_pair(g: Graph, x: SetLike, u: int, v: int) -> Optional[VisibilityWitness]:
    """A u,v-geodesic with no internal vertex in ``x``, or None."""
    mask = to_mask(x)
    if u == v:
        raise PreconditionError(f"Visibility needs two distinct vertices, got {u} twice")
    for w in (u, v):
        if not mask >> w & 1:
            raise PreconditionError(f"Vertex {w} is not in the queried set")
    path = geodesic_path(g, u, v, avoid=mask)
    if not path:
        return None
    return VisibilityWitness(pair=[u, v], path=path)


def _unseen_from(g: Graph, mask: int, u: int) -> int:
    """Members of ``mask`` not X-visible from ``u`` (BFS that never passes through X)."""
    index = geodesic_index(g)
    frontier = 1 << u
    seen = 1 << u
    k = 1
    while frontier:
        reach = 0
        for w in iter_bits(frontier):
            reach |= g.rows[w]
        layer = reach & index.sphere(u, k)
        seen |= layer & mask
        frontier = layer & ~mask
        k += 1
    return mask & ~seen


def first_invisible_pair(g: Graph, x: SetLike) -> Optional[Tuple[int, int]]:
    """Lexicographically first pair of ``x`` that is not X-visible."""
    mask = to_mask(x)
    if popcount(mask) <= 1:
        return None
    require_connected(g, "Mutual-visibility")
    for u in iter_bits(mask):
        later = _unseen_from(g, mask, u) & ~((1 << (u + 1)) - 1)
        if later:
            return u, (later & -later).bit_length() - 1
    return None


def is_mv_set(g: Graph, x: SetLike) -> bool:
    return first_invisible_pair(g, x) is None


def is_imv_set(g: Graph, x: SetLike) -> bool:
    return g.is_independent(to_mask(x)) and is_mv_set(g, x)


class VisibilityTracker:
    """Incrementally grown MV (or IMV) set with undo.

    For every member pair the interior of one witness geodesic is stored. Adding
    ``w`` checks the new pairs ``(a, w)`` and re-routes the stored witnesses that
    pass through ``w``; nothing else can be affected.
    """

    def __init__(self, g: Graph, independent: bool = False):
        self.g = g
        self.independent = independent
        self.mask = 0
        self.members: List[int] = []
        self._witness: Dict[Tuple[int, int], int] = {}
        self._undo: List[List[Tuple[Tuple[int, int], Optional[int]]]] = []

    def __len__(self) -> int:
        return len(self.members)

    def _route(self, a: int, b: int, avoid: int) -> Optional[int]:
        path = geodesic_path(self.g, a, b, avoid=avoid)
        if not path:
            return None
        return mask_of(path[1:-1])

    def add(self, w: int) -> bool:
        """Add ``w``; return False and leave the state untouched if the set breaks."""
        if self.independent and self.g.rows[w] & self.mask:
            return False
        avoid = self.mask | (1 << w)
        changes: List[Tuple[Tuple[int, int], Optional[int]]] = []
        for a in self.members:
            interior = self._route(a, w, avoid)
            if interior is None:
                self._rollback(changes)
                return False
            key = (a, w) if a < w else (w, a)
            changes.append((key, None))
            self._witness[key] = interior
        bit = 1 << w
        for key, interior in list(self._witness.items()):
            if interior & bit:
                rerouted = self._route(key[0], key[1], avoid)
                if rerouted is None:
                    self._rollback(changes)
                    return False
                changes.append((key, interior))
                self._witness[key] = rerouted
        self.mask |= bit
        self.members.append(w)
        self._undo.append(changes)
        return True

    def _rollback(self, changes: List[Tuple[Tuple[int, int], Optional[int]]]) -> None:
        for key, old in reversed(changes):
            if old is None:
                del self._witness[key]
            else:
                self._witness[key] = old

    def pop(self) -> int:
        w = self.members.pop()
        self.mask &= ~(1 << w)
        self._rollback(self._undo.pop())
        return w

    def accepts(self, w: int) -> bool:
        """Whether ``w`` could be added, without keeping it."""
        if self.add(w):
            self.pop()
            return True
        return False


def _set_search(
    g: Graph, independent: bool, upper: int, budget: NodeBudget, name: str
) -> InvariantResult:
    order = g.degree_order()
    tracker = VisibilityTracker(g, independent=independent)

    # greedy start
    for v in order:
        tracker.add(v)
    best = list(tracker.members)
    while len(tracker):
        tracker.pop()
    budget.bounds(lower=len(best), upper=upper)
    budget.best = len(best)

    def search(candidates: List[int]) -> bool:
        nonlocal best
        budget.tick()
        if len(tracker) > len(best):
            best = list(tracker.members)
            budget.best = len(best)
            logger.debug("%s: improved to %d after %d nodes", name, len(best), budget.nodes)
            if len(best) >= upper:
                return True
        for i, c in enumerate(candidates):
            if len(tracker) + len(candidates) - i <= len(best):
                return False
            tracker.add(c)
            rest = [d for d in candidates[i + 1 :] if tracker.accepts(d)]
            done = search(rest)
            tracker.pop()
            if done:
                return True
        return False

    if len(best) < upper:
        search([v for v in order])
    return InvariantResult(name=name, value=len(best), witness=sorted(best), nodes=budget.nodes)


def mu(g: Graph, budget: Budget = None) -> InvariantResult:
    """Largest mutual-visibility set."""
    require_connected(g, "mu")
    return _set_search(g, False, g.n, as_budget(budget, "mu"), "mu")


def mu_i(g: Graph, budget: Budget = None) -> InvariantResult:
    """Largest independent mutual-visibility set; bounded above by α."""
    require_connected(g, "mu_i")
    budget = as_budget(budget, "mu_i")
    independence = alpha(g, budget)
    if g.n <= 1:
        return InvariantResult(name="mu_i", value=g.n, witness=list(range(g.n)))
    if diameter(g) <= 3 and is_imv_set(g, independence.witness):
        # every independent set is IMV at diameter <= 3
        return InvariantResult(
            name="mu_i", value=independence.value, witness=independence.witness, nodes=budget.nodes
        )
    return _set_search(g, True, independence.value, budget, "mu_i")


def _color_sort(g: Graph, candidates: int) -> Tuple[List[int], List[int]]:
    """Greedy coloring of the candidates; returns vertices and their color bounds."""
    order: List[int] = []
    bounds: List[int] = []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        available = uncolored
        while available:
            v = (available & -available).bit_length() - 1
            order.append(v)
            bounds.append(color)
            available &= ~g.rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
    return order, bounds


def max_clique(g: Graph, budget: Budget = None, name: str = "omega") -> InvariantResult:
    budget = as_budget(budget, name)
    best_mask = 0
    best_size = 0

    def expand(chosen: int, size: int, candidates: int) -> None:
        nonlocal best_mask, best_size
        budget.tick()
        order, bounds = _color_sort(g, candidates)
        for v, bound in zip(reversed(order), reversed(bounds)):
            if size + bound <= best_size:
                return
            inner = candidates & g.rows[v]
            if inner:
                expand(chosen | 1 << v, size + 1, inner)
            elif size + 1 > best_size:
                best_mask, best_size = chosen | 1 << v, size + 1
                budget.best = best_size
            candidates &= ~(1 << v)

    if g.n:
        expand(0, 0, g.full_mask)
    return InvariantResult(
        name=name, value=best_size, witness=bits_to_list(best_mask), nodes=budget.nodes
    )


def omega(g: Graph, budget: Budget = None) -> InvariantResult:
    """Clique number."""
    return max_clique(g, budget, "omega")


def alpha(g: Graph, budget: Budget = None) -> InvariantResult:
    """Independence number (largest clique of the complement)."""
    return max_clique(g.complement(), budget, "alpha")
