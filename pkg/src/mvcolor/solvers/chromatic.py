"""Exact chromatic numbers: proper, 1-defective, MV and IMV colorings.

All four searches share one engine. A k-coloring is built vertex by vertex; the
next vertex is the one with the fewest classes still able to take it (DSATUR for
the proper mode), and a vertex may open at most one new class, so colorings that
differ by a renaming of classes are explored once. Every class keeps its own
incremental state, and since all four class properties are hereditary a class
that rejects a vertex keeps rejecting it deeper in the tree.
"""

import logging
import math
from typing import Callable, List, Optional, Tuple, Union

from mvcolor.core.bits import mask_of
from mvcolor.core.budget import NodeBudget, as_budget
from mvcolor.core.geodesic import diag, diameter, is_convex, longest_convex_path, require_connected
from mvcolor.core.graph import Graph
from mvcolor.core.vertexset import VertexSet
from mvcolor.exceptions import InputError, PreconditionError
from mvcolor.models.coloring import MODES, Coloring, ColoringViolation, ValidationReport
from mvcolor.models.results import Bound, BoundReport
from mvcolor.solvers.visibility import (
    VisibilityTracker,
    first_invisible_pair,
    mu,
    mu_i,
    omega,
)

logger = logging.getLogger(__name__)

Budget = Union[NodeBudget, int, None]
ChromaticResult = Tuple[int, Coloring]


class _ProperClass:
    def __init__(self, g: Graph):
        self.g = g
        self.mask = 0
        self.stack: List[int] = []

    def accepts(self, v: int) -> bool:
        return not self.g.rows[v] & self.mask

    def add(self, v: int) -> bool:
        if not self.accepts(v):
            return False
        self.mask |= 1 << v
        self.stack.append(v)
        return True

    def pop(self) -> int:
        v = self.stack.pop()
        self.mask &= ~(1 << v)
        return v


class _DefectiveClass:
    """Class inducing a graph of maximum degree at most one."""

    def __init__(self, g: Graph):
        self.g = g
        self.mask = 0
        self.paired = [False] * g.n
        self.stack: List[Tuple[int, int]] = []

    def _partner(self, v: int) -> Optional[int]:
        inside = self.g.rows[v] & self.mask
        if not inside:
            return -1
        if inside & (inside - 1):
            return None
        u = inside.bit_length() - 1
        return None if self.paired[u] else u

    def accepts(self, v: int) -> bool:
        return self._partner(v) is not None

    def add(self, v: int) -> bool:
        u = self._partner(v)
        if u is None:
            return False
        if u >= 0:
            self.paired[u] = self.paired[v] = True
        self.mask |= 1 << v
        self.stack.append((v, u))
        return True

    def pop(self) -> int:
        v, u = self.stack.pop()
        if u >= 0:
            self.paired[u] = self.paired[v] = False
        self.mask &= ~(1 << v)
        return v


def _class_factory(g: Graph, mode: str) -> Callable[[], object]:
    if mode == "proper":
        return lambda: _ProperClass(g)
    if mode == "defective1":
        return lambda: _DefectiveClass(g)
    if mode == "mv":
        return lambda: VisibilityTracker(g)
    if mode == "imv":
        return lambda: VisibilityTracker(g, independent=True)
    raise InputError(f"Unknown coloring mode '{mode}'", suggestion=f"Use one of {', '.join(MODES)}")


def validate_coloring(g: Graph, c: Coloring, mode: str) -> ValidationReport:
    """Check every class of ``c``; report the first violating class."""
    if mode not in MODES:
        raise InputError(
            f"Unknown coloring mode '{mode}'", suggestion=f"Use one of {', '.join(MODES)}"
        )
    if c.n != g.n:
        raise InputError(f"Coloring covers {c.n} vertices, graph has {g.n}")
    if mode in ("mv", "imv") and g.n > 1:
        require_connected(g, "MV coloring validation")

    for color, members in zip(sorted(set(c.assignment)), c.classes()):
        mask = mask_of(members)
        violation = None
        if mode in ("proper", "imv"):
            for u in members:
                inside = g.rows[u] & mask
                if inside:
                    w = (inside & -inside).bit_length() - 1
                    violation = ColoringViolation(
                        color=color, reason=f"adjacent vertices {u} and {w}", vertices=[u, w]
                    )
                    break
        elif mode == "defective1":
            for u in members:
                inside = [w for w in g.adjacency[u] if mask >> w & 1]
                if len(inside) > 1:
                    violation = ColoringViolation(
                        color=color,
                        reason=f"vertex {u} has {len(inside)} neighbors in its class",
                        vertices=[u, *inside],
                    )
                    break
        if violation is None and mode in ("mv", "imv"):
            pair = first_invisible_pair(g, mask)
            if pair is not None:
                violation = ColoringViolation(
                    color=color,
                    reason=f"vertices {pair[0]} and {pair[1]} are not mutually visible",
                    vertices=list(pair),
                )
        if violation is not None:
            return ValidationReport(mode=mode, valid=False, k=c.k, violation=violation)
    return ValidationReport(mode=mode, valid=True, k=c.k)


def is_valid_coloring(g: Graph, c: Coloring, mode: str) -> bool:
    return validate_coloring(g, c, mode).valid


def greedy_coloring(g: Graph, mode: str) -> Coloring:
    """First-fit coloring in descending-degree order."""
    make = _class_factory(g, mode)
    classes: list = []
    assignment = [0] * g.n
    for v in g.degree_order():
        for i, state in enumerate(classes):
            if state.add(v):
                assignment[v] = i
                break
        else:
            state = make()
            state.add(v)
            assignment[v] = len(classes)
            classes.append(state)
    return Coloring(assignment=assignment)


def find_coloring(g: Graph, k: int, mode: str, budget: Budget = None) -> Optional[Coloring]:
    """A coloring with at most ``k`` classes in ``mode``, or None if none exists."""
    budget = as_budget(budget, f"{mode} {k}-coloring")
    n = g.n
    if n == 0:
        return Coloring(assignment=[])
    if k <= 0:
        return None
    make = _class_factory(g, mode)
    states = [make() for _ in range(k)]
    color = [-1] * n
    used = 0

    def options(v: int) -> List[int]:
        fits = [i for i in range(used) if states[i].accepts(v)]
        if used < k:
            fits.append(used)
        return fits

    def select() -> Tuple[int, List[int]]:
        best_key = None
        best: Tuple[int, List[int]] = (-1, [])
        for v in range(n):
            if color[v] >= 0:
                continue
            fits = options(v)
            key = (len(fits), -g.degree(v), v)
            if best_key is None or key < best_key:
                best_key, best = key, (v, fits)
                if not fits:
                    break
        return best

    def extend(remaining: int) -> bool:
        nonlocal used
        budget.tick()
        if remaining == 0:
            return True
        v, fits = select()
        for i in fits:
            states[i].add(v)
            color[v] = i
            opened = i == used
            if opened:
                used += 1
            if extend(remaining - 1):
                return True
            if opened:
                used -= 1
            color[v] = -1
            states[i].pop()
        return False

    if extend(n):
        return Coloring(assignment=list(color)).normalized()
    return None


def _minimize(g: Graph, mode: str, floor: int, budget: NodeBudget) -> ChromaticResult:
    if g.n == 0:
        return 0, Coloring(assignment=[])
    greedy = greedy_coloring(g, mode).normalized()
    upper = greedy.k
    budget.bounds(lower=floor, upper=upper)
    budget.best = upper
    for k in range(max(floor, 1), upper):
        logger.debug("%s: trying k=%d (bounds %d..%d)", budget.label, k, floor, upper)
        found = find_coloring(g, k, mode, budget)
        if found is not None:
            return found.k, found
        budget.bounds(lower=k + 1)
    return upper, greedy


def chi(g: Graph, budget: Budget = None) -> ChromaticResult:
    """Chromatic number with an optimal proper coloring."""
    budget = as_budget(budget, "chi")
    floor = omega(g, budget).value
    return _minimize(g, "proper", floor, budget)


def chi_defective1(g: Graph, budget: Budget = None) -> ChromaticResult:
    """Least k admitting a (k,1)-coloring."""
    budget = as_budget(budget, "chi_defective1")
    floor = math.ceil(omega(g, budget).value / 2)
    return _minimize(g, "defective1", floor, budget)


def convex_path_lower_bound(p: int) -> int:
    """χ_μ of a convex path on ``p`` vertices."""
    return math.ceil(p / 2)


def chi_mu(g: Graph, budget: Budget = None, shortcuts: bool = True) -> ChromaticResult:
    """MV chromatic number.

    ``shortcuts`` enables the convex-path floor; without it the search starts at
    the trivial floor (1 for complete graphs, 2 otherwise).
    """
    require_connected(g, "chi_mu")
    budget = as_budget(budget, "chi_mu")
    if g.n <= 1 or g.is_complete():
        return _minimize(g, "mv", 1, budget)
    floor = 2
    if shortcuts:
        floor = max(floor, convex_path_lower_bound(longest_convex_path(g)))
    return _minimize(g, "mv", floor, budget)


def chi_mu_i(g: Graph, budget: Budget = None, shortcuts: bool = True) -> ChromaticResult:
    """IMV chromatic number.

    With ``shortcuts`` a graph of diameter at most 3 is solved as a proper coloring
    (there every independent set is IMV), and graphs that are not bipartite or have
    diameter above 3 start the search at 3.
    """
    require_connected(g, "chi_mu_i")
    budget = as_budget(budget, "chi_mu_i")
    if g.n <= 1:
        return _minimize(g, "imv", 1, budget)
    floor = omega(g, budget).value
    if shortcuts:
        if diameter(g) <= 3:
            k, coloring = chi(g, budget)
            if is_valid_coloring(g, coloring, "imv"):
                return k, coloring
            logger.warning("proper coloring of a diameter<=3 graph failed the IMV check")
        elif g.n >= 2:
            floor = max(floor, 3)
        floor = max(floor, convex_path_lower_bound(longest_convex_path(g)))
    return _minimize(g, "imv", floor, budget)


def strong_product_lower_bound(g: Graph, h: Graph, budget: Budget = None) -> Bound:
    """Lower bound on χ_μᵢ of ``g ⊠ h``: max of half the diagonal and ω(g)ω(h)."""
    budget = as_budget(budget, "strong_product_lower_bound")
    half_diag = math.ceil(diag(g, h) / 2)
    cliques = omega(g, budget).value * omega(h, budget).value
    if half_diag >= cliques:
        return Bound(value=half_diag, source="strong-diagonal")
    return Bound(value=cliques, source="strong-clique")


def lower_bounds(
    g: Graph, convex: Optional[VertexSet] = None, budget: Budget = None
) -> List[Bound]:
    """Applicable lower bounds on χ_μᵢ(g), each tagged with its source."""
    require_connected(g, "lower_bounds")
    budget = as_budget(budget, "lower_bounds")
    n = g.n
    bounds = [
        Bound(value=math.ceil(n / mu(g, budget).value), source="n-over-mu"),
        Bound(value=math.ceil(n / mu_i(g, budget).value), source="n-over-mu-i"),
        Bound(value=chi(g, budget)[0], source="chromatic"),
        Bound(value=omega(g, budget).value, source="clique"),
        Bound(value=convex_path_lower_bound(longest_convex_path(g)), source="convex-path"),
    ]
    if convex is not None:
        if not is_convex(g, convex):
            raise PreconditionError("Supplied vertex set is not convex")
        sub, _ = g.induced_subgraph(convex)
        bounds.append(Bound(value=chi_mu_i(sub, budget)[0], source="convex-subgraph"))
    if n >= 2 and (not g.is_bipartite() or diameter(g) > 3):
        bounds.append(Bound(value=3, source="bipartite-diameter"))
    if g.product is not None and g.product.kind == "strong":
        bounds.append(strong_product_lower_bound(g.product.left, g.product.right, budget))
    return bounds


def upper_bounds(g: Graph, budget: Budget = None) -> List[Bound]:
    """Applicable upper bounds on χ_μᵢ(g), each tagged with its source."""
    require_connected(g, "upper_bounds")
    budget = as_budget(budget, "upper_bounds")
    n = g.n
    chromatic = chi(g, budget)[0]
    mv_number = chi_mu(g, budget)[0]
    bounds = [Bound(value=greedy_coloring(g, "imv").k, source="greedy-imv")]
    if g.is_bipartite():
        bounds.append(Bound(value=2 * mv_number, source="bipartite-two-chi-mu"))
    bounds.append(Bound(value=chromatic * mv_number, source="chi-times-chi-mu"))
    if n >= 2 and g.find_triangle() is None:
        bounds.append(
            Bound(value=math.ceil((n - mu_i(g, budget).value) / 2) + 1, source="triangle-free-mu-i")
        )
        bounds.append(
            Bound(value=math.ceil((n - g.max_degree()) / 2) + 1, source="triangle-free-degree")
        )
    if n >= 1 and diameter(g) <= 3:
        bounds.append(Bound(value=chromatic, source="diameter-at-most-3"))
    return bounds


def bound_report(
    g: Graph, convex: Optional[VertexSet] = None, budget: Budget = None
) -> BoundReport:
    budget = as_budget(budget, "bound_report")
    lows = lower_bounds(g, convex, budget)
    highs = upper_bounds(g, budget)
    lower = max(lows, key=lambda b: b.value)
    upper = min(highs, key=lambda b: b.value)
    return BoundReport(lower=lower, upper=upper, lower_candidates=lows, upper_candidates=highs)

