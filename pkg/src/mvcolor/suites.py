"""Verification suites behind ``mvcolor verify``.

Each suite recomputes a family of known identities and bounds at desk scale and
returns one CheckResult per property. A property quantified over a corpus of
graphs becomes a single check that records the first counterexample.
"""

import logging
import math
import time
from typing import Callable, Dict, Iterable, List, Optional

from mvcolor.builders.corpus import (
    all_graphs,
    connected_graphs,
    random_triangle_free,
    sampled_graphs,
)
from mvcolor.builders.families import (
    complete_graph,
    cycle_graph,
    path_graph,
    petersen,
    random_tree,
    trees_of_order,
)
from mvcolor.builders.products import cartesian, corona, fiber, hamming, lex, strong
from mvcolor.constructive.cycles import cycle_imv
from mvcolor.constructive.products import (
    cartesian_prism_mv,
    lex_mv_2coloring,
    render_grid,
    strong_paths_imv,
    strong_paths_mv,
)
from mvcolor.constructive.subdivision import subdiv_imv_from_partition
from mvcolor.constructive.trees import tree_exchange
from mvcolor.constructive.trianglefree import sharpness_coloring, trianglefree_imv
from mvcolor.core.budget import NodeBudget
from mvcolor.core.geodesic import diameter, geodesic_index, is_convex
from mvcolor.core.graph import Graph
from mvcolor.exceptions import InputError
from mvcolor.hardness import (
    build_sat_gadget,
    corona_law,
    figure_instance,
    gadget_check,
    imv_set_from_assignment,
    random_cnf,
    verify_corona_reduction,
    verify_sat_reduction,
)
from mvcolor.models.results import CheckResult, SuiteReport
from mvcolor.solvers.brute import brute_chromatic, brute_mu, brute_mu_i
from mvcolor.solvers.chromatic import (
    chi,
    chi_defective1,
    chi_mu,
    chi_mu_i,
    strong_product_lower_bound,
)
from mvcolor.solvers.ramsey import (
    bipartite_sandwich_report,
    rho,
    rho_bounds_from_ramsey,
    rho_rs,
    rho_with_partition,
    sandwich_report,
    verify_k4free_partition,
)
from mvcolor.solvers.visibility import alpha, is_imv_set, mu, mu_i

logger = logging.getLogger(__name__)

SuiteFn = Callable[[NodeBudget], List[CheckResult]]
SUITES: Dict[str, SuiteFn] = {}

GOLDEN_STRONG_12 = [
    [1, 4, 5, 1, 4, 5, 2, 3, 6, 2, 3, 6],
    [2, 3, 6, 2, 3, 6, 1, 4, 5, 1, 4, 5],
] * 6
GOLDEN_STRONG_8 = [
    [1, 4, 2, 3, 2, 3, 1, 4],
    [2, 3, 1, 4, 1, 4, 2, 3],
] * 4


def suite(name: str) -> Callable[[SuiteFn], SuiteFn]:
    def register(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn

    return register


class _Checks:
    def __init__(self) -> None:
        self.results: List[CheckResult] = []

    def expect(self, name: str, condition: bool, detail: str = "") -> None:
        self.results.append(CheckResult(name=name, passed=bool(condition), detail=detail))

    def equal(self, name: str, got, expected) -> None:
        self.expect(name, got == expected, f"got {got}, expected {expected}")

    def forall(
        self, name: str, items: Iterable, failure: Callable[[object], Optional[str]]
    ) -> None:
        """``failure`` returns None when an item satisfies the property."""
        count = 0
        for item in items:
            count += 1
            problem = failure(item)
            if problem is not None:
                self.expect(name, False, f"{item!r}: {problem}")
                return
        self.expect(name, True, f"{count} cases")


def cycle_value(n: int, mode: str) -> int:
    """Closed-form MV / IMV chromatic number of C_n."""
    if mode == "imv" and n in (3, 5):
        return 3
    if mode == "mv" and n == 3:
        return 1
    if mode == "mv" and n == 5:
        return 2
    return math.ceil(n / 3)


def strong_paths_mv_value(t: int, r: int) -> int:
    """Closed-form χ_μ(P_t ⊠ P_r) for min(t, r) >= 2."""
    if t == r == 2:
        return 1
    if min(t, r) == 2:
        return 2
    return min(math.ceil(t / 2), math.ceil(r / 2))


def _order_eight_corpus(seed: int, count: int = 2000) -> List[Graph]:
    """Connected graphs up to seven vertices, trees on eight and seeded eight-vertex samples."""
    graphs = list(connected_graphs(7)) + trees_of_order(8)
    return graphs + sampled_graphs(count, 8, seed=seed, min_n=8)


@suite("cycles")
def _cycles(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    for n in range(3, 16):
        g = cycle_graph(n)
        imv = chi_mu_i(g, budget, shortcuts=False)[0]
        mv = chi_mu(g, budget, shortcuts=False)[0]
        checks.equal(f"chi_mu_i(C_{n})", imv, cycle_value(n, "imv"))
        checks.equal(f"chi_mu(C_{n})", mv, cycle_value(n, "mv"))
        checks.equal(f"cycle_imv({n}) classes", cycle_imv(n).k, cycle_value(n, "imv"))
    return checks.results


@suite("paths")
def _paths(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    for n in range(1, 10):
        checks.equal(f"chi_mu(P_{n})", chi_mu(path_graph(n), budget)[0], math.ceil(n / 2))
    return checks.results


@suite("trees")
def _trees(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    trees = [t for n in range(3, 9) for t in trees_of_order(n)]
    trees += [random_tree(seed, 9 + seed % 3) for seed in range(500)]

    def equal_numbers(t: Graph) -> Optional[str]:
        k, start = chi_mu(t, budget, shortcuts=False)
        ki = chi_mu_i(t, budget, shortcuts=False)[0]
        if k != ki:
            return f"chi_mu={k}, chi_mu_i={ki}"
        exchanged = tree_exchange(t, start)
        if exchanged.k != k:
            return f"exchange produced {exchanged.k} classes from {k}"
        return None

    checks.forall("chi_mu_i(T) == chi_mu(T) and exchange keeps the count", trees, equal_numbers)
    return checks.results


@suite("bounds")
def _bounds(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    graphs = _order_eight_corpus(seed=1)

    def sandwich(g: Graph) -> Optional[str]:
        chromatic = chi(g, budget)[0]
        mv = chi_mu(g, budget, shortcuts=False)[0]
        imv = chi_mu_i(g, budget, shortcuts=False)[0]
        lower = max(chromatic, mv, math.ceil(g.n / mu_i(g, budget).value))
        if not lower <= imv <= chromatic * mv:
            return f"chi={chromatic}, chi_mu={mv}, chi_mu_i={imv}"
        return None

    checks.forall("max(chi, chi_mu, n/mu_i) <= chi_mu_i <= chi*chi_mu", graphs, sandwich)
    return checks.results


@suite("diameter")
def _diameter(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    graphs = _order_eight_corpus(seed=2)
    small = [g for g in graphs if diameter(g) <= 3]
    two = [g for g in graphs if diameter(g) == 2]

    def independent_sets_visible(g: Graph) -> Optional[str]:
        a, m = alpha(g, budget).value, mu_i(g, budget).value
        return None if a == m else f"alpha={a}, mu_i={m}"

    def proper_is_imv(g: Graph) -> Optional[str]:
        c, ci = chi(g, budget)[0], chi_mu_i(g, budget, shortcuts=False)[0]
        return None if c == ci else f"chi={c}, chi_mu_i={ci}"

    def defective_bound(g: Graph) -> Optional[str]:
        mv, d1 = chi_mu(g, budget, shortcuts=False)[0], chi_defective1(g, budget)[0]
        return None if mv <= d1 else f"chi_mu={mv}, chi_1={d1}"

    checks.forall("diam <= 3: mu_i == alpha", small, independent_sets_visible)
    checks.forall("diam <= 3: chi_mu_i == chi", small, proper_is_imv)
    checks.forall("diam == 2: chi_mu <= chi_1", two, defective_bound)
    p = petersen()
    checks.equal("chi_mu(Petersen)", chi_mu(p, budget, shortcuts=False)[0], 2)
    checks.equal("chi(Petersen)", chi(p, budget)[0], 3)
    checks.equal("chi_1(Petersen)", chi_defective1(p, budget)[0], 2)
    return checks.results


@suite("characterization")
def _characterization(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()

    def two_colorable(g: Graph) -> Optional[str]:
        imv = chi_mu_i(g, budget, shortcuts=False)[0]
        expected = g.is_bipartite() and 1 <= diameter(g) <= 3
        return None if (imv == 2) == expected else f"chi_mu_i={imv}"

    checks.forall(
        "chi_mu_i == 2 iff bipartite with 1 <= diam <= 3",
        _order_eight_corpus(seed=3),
        two_colorable,
    )
    return checks.results


def _lex_distance_law(gh: Graph, g: Graph, h: Graph) -> Optional[str]:
    dist_gh = geodesic_index(gh).dist
    dist_g = geodesic_index(g).dist
    dist_h = geodesic_index(h).dist
    info = gh.product
    for u in gh:
        a, b = info.coordinates(u)
        for v in gh:
            c, d = info.coordinates(v)
            expected = min(2, dist_h[b][d]) if a == c else dist_g[a][c]
            if dist_gh[u][v] != expected:
                return f"d({u},{v}) = {dist_gh[u][v]}, expected {expected}"
    return None


@suite("lexicographic")
def _lexicographic(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    pairs = [(g, h) for g in connected_graphs(4, min_n=2) for h in all_graphs(3, min_n=2)]

    def mv_two(pair) -> Optional[str]:
        g, h = pair
        if g.is_complete() and h.is_complete():
            return None
        gh = lex(g, h)
        value = chi_mu(gh, budget, shortcuts=False)[0]
        if value != 2:
            return f"chi_mu={value}"
        lex_mv_2coloring(gh)
        return None

    def imv_equals_chi(pair) -> Optional[str]:
        g, h = pair
        if h.m == 0:
            return None
        gh = lex(g, h)
        ci, c = chi_mu_i(gh, budget, shortcuts=False)[0], chi(gh, budget)[0]
        if ci != c:
            return f"chi_mu_i={ci}, chi={c}"
        m, expected = mu_i(gh, budget).value, alpha(g, budget).value * alpha(h, budget).value
        return None if m == expected else f"mu_i={m}, alpha(G)alpha(H)={expected}"

    checks.forall("chi_mu(G o H) == 2", pairs, mv_two)
    checks.forall("chi_mu_i(G o H) == chi and mu_i == alpha(G)alpha(H)", pairs, imv_equals_chi)
    checks.forall(
        "lexicographic distance law", pairs, lambda p: _lex_distance_law(lex(*p), *p)
    )
    return checks.results


@suite("subdivision")
def _subdivision(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    for n in (3, 4, 5, 6):
        report = sandwich_report(n, budget)
        checks.expect(f"sandwich S(K_{n})", report.holds, str(report.model_dump()))
        _, partition = rho_with_partition(n, budget)
        built = subdiv_imv_from_partition(n, partition)
        checks.expect(
            f"subdiv_imv({n}) <= rho + 1", built.k <= report.rho + 1, f"{built.k} classes"
        )
        if n == 4:
            checks.equal("chi_mu_i(S(K_4))", report.chi_mu_i, 3)
    for r in range(1, 4):
        for s in range(r, 4):
            report = bipartite_sandwich_report(r, s, budget)
            kind = "sandwich" if report.upper_asserted else "lower chain"
            detail = str(report.model_dump()) + f", upper end met: {report.upper_holds}"
            checks.expect(f"{kind} S(K_{r},{s})", report.holds, detail)
    return checks.results


@suite("ramsey")
def _ramsey(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    checks.equal("rho(3)", rho(3, budget), 1)
    for n in range(4, 10):
        value, partition = rho_with_partition(n, budget)
        checks.equal(f"rho({n})", value, 2)
        checks.expect(f"rho({n}) partition is K4-free", verify_k4free_partition(partition) is None)
    for s in range(1, 5):
        checks.equal(f"rho(1,{s})", rho_rs(1, s, budget), 1)
    checks.equal("rho(2,2)", rho_rs(2, 2, budget), 2)
    checks.equal("rho(2,3)", rho_rs(2, 3, budget), 2)
    checks.equal("rho(18) bounds", rho_bounds_from_ramsey(18), (3, None))
    return checks.results


@suite("strong")
def _strong(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    for size, golden in ((12, GOLDEN_STRONG_12), (8, GOLDEN_STRONG_8)):
        grid = render_grid(strong_paths_imv(size, size).coloring, size, size)
        checks.expect(f"P_{size} x P_{size} scheme", grid == golden)
    for t, r in ((16, 8), (10, 5), (7, 7)):
        built = strong_paths_imv(t, r)
        checks.equal(f"strongpaths-imv({t},{r}) classes", built.k, built.claimed_k)
    grid = strong(path_graph(8), path_graph(8))
    checks.equal("chi_mu_i(P_8 x P_8)", chi_mu_i(grid, budget)[0], 4)
    for t in range(2, 7):
        for r in range(2, t + 1):
            g = strong(path_graph(t), path_graph(r))
            expected = strong_paths_mv_value(t, r)
            checks.equal(f"chi_mu(P_{t} x P_{r})", chi_mu(g, budget)[0], expected)
            checks.equal(f"strongpaths-mv({t},{r}) classes", strong_paths_mv(t, r).k, expected)

    factors = list(connected_graphs(3, min_n=2))

    def lower_bound(pair) -> Optional[str]:
        g, h = pair
        bound = strong_product_lower_bound(g, h, budget).value
        value = chi_mu_i(strong(g, h), budget, shortcuts=False)[0]
        return None if value >= bound else f"chi_mu_i={value} < {bound}"

    checks.forall(
        "chi_mu_i(G x H) >= max(diag/2, omega omega)",
        [(g, h) for g in factors for h in factors],
        lower_bound,
    )
    return checks.results


@suite("cartesian")
def _cartesian(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    pairs = [(g, h) for g in connected_graphs(3, min_n=2) for h in connected_graphs(3, min_n=2)]

    def fibers_convex(pair) -> Optional[str]:
        gh = cartesian(*pair)
        g, h = pair
        for at in h:
            if not is_convex(gh, fiber(gh, "G", at)):
                return f"G-fiber at {at}"
        for at in g:
            if not is_convex(gh, fiber(gh, "H", at)):
                return f"H-fiber at {at}"
        return None

    def factor_lower_bound(pair) -> Optional[str]:
        g, h = pair
        value = chi_mu(cartesian(g, h), budget, shortcuts=False)[0]
        bound = max(chi_mu(g, budget)[0], chi_mu(h, budget)[0])
        return None if value >= bound else f"chi_mu={value} < {bound}"

    def prism(g: Graph) -> Optional[str]:
        k, imv = chi_mu_i(g, budget)
        for n in (1, 2, 3):
            built = cartesian_prism_mv(g, n, imv)
            if built.k != k:
                return f"n={n}: {built.k} classes, expected {k}"
        return None

    def tree_prism(t: Graph) -> Optional[str]:
        a = chi_mu(cartesian(t, complete_graph(2)), budget, shortcuts=False)[0]
        b = chi_mu(t, budget, shortcuts=False)[0]
        return None if a == b else f"chi_mu(T x K_2)={a}, chi_mu(T)={b}"

    checks.forall("fibers are convex", pairs, fibers_convex)
    checks.forall("chi_mu(G x H) >= max(chi_mu(G), chi_mu(H))", pairs, factor_lower_bound)
    checks.forall("prism coloring uses chi_mu_i(G) classes", connected_graphs(4, min_n=2), prism)
    checks.forall(
        "chi_mu(T x K_2) == chi_mu(T)",
        [t for n in range(3, 6) for t in trees_of_order(n)],
        tree_prism,
    )
    checks.equal("chi_mu_i(K_2 x K_2 x K_2)", chi_mu_i(hamming([2, 2, 2]), budget)[0], 2)
    checks.equal("chi_mu_i(K_2 x K_2 x K_3)", chi_mu_i(hamming([2, 2, 3]), budget)[0], 3)
    return checks.results


@suite("hardness")
def _hardness(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    figure = figure_instance()
    gadget = build_sat_gadget(figure)
    checks.equal("alpha(figure gadget)", alpha(gadget, budget).value, 17)
    witness = imv_set_from_assignment(figure, [True, False, True, False])
    checks.expect(
        "figure assignment gives an IMV set of size 17",
        len(witness) == 17 and is_imv_set(gadget, witness),
    )
    checks.expect("figure gadget structure", gadget_check(figure, gadget).ok)

    formulas = [random_cnf(seed, 1 + seed % 3, 1 + seed % 4) for seed in range(60)]
    checks.forall(
        "SAT iff mu_i == alpha",
        formulas,
        lambda f: None if verify_sat_reduction(f, budget=budget).holds else "iff fails",
    )
    checks.forall(
        "corona reduction: mu_i == alpha(H), chi_mu_i == chi(H) + 1",
        all_graphs(7),
        lambda h: None if verify_corona_reduction(h, budget=budget).holds else "law fails",
    )

    def law(seed: int) -> Optional[str]:
        g = random_tree(seed, 2 + seed % 3)
        h = sampled_graphs(1, 4, seed=seed, min_n=1)[0]
        values = corona_law(g, h, budget)
        return None if values["mu_i"] == values["expected"] else str(values)

    checks.forall("mu_i(G . H) == n(G) alpha(H)", range(20), law)
    checks.equal(
        "mu_i(P_3 . P_2)", mu_i(corona(path_graph(3), path_graph(2)), budget).value, 3
    )
    return checks.results


@suite("trianglefree")
def _trianglefree(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    graphs = [random_triangle_free(seed, 4 + seed % 9) for seed in range(200)]

    def constructive(g: Graph) -> Optional[str]:
        built = trianglefree_imv(g)
        bound = math.ceil((g.n - built.notes["mu_i"]) / 2) + 1
        return None if built.k <= bound else f"{built.k} classes > {bound}"

    def degree_bound(g: Graph) -> Optional[str]:
        value = chi_mu_i(g, budget)[0]
        bound = math.ceil((g.n - g.max_degree()) / 2) + 1
        return None if value <= bound else f"chi_mu_i={value} > {bound}"

    checks.forall("trianglefree_imv within the mu_i bound", graphs, constructive)
    checks.forall("chi_mu_i within the degree bound", graphs, degree_bound)
    for k in (1, 2, 3):
        checks.equal(f"sharpness coloring k={k}", sharpness_coloring(k, 2).k, k + 1)
    return checks.results


@suite("oracle")
def _oracle(budget: NodeBudget) -> List[CheckResult]:
    checks = _Checks()
    graphs = list(connected_graphs(7, min_n=2)) + sampled_graphs(500, 9, seed=2)

    def agree(g: Graph) -> Optional[str]:
        pairs = {
            "mu": (mu(g, budget).value, brute_mu(g)[0]),
            "mu_i": (mu_i(g, budget).value, brute_mu_i(g)[0]),
            "chi_mu": (chi_mu(g, budget)[0], brute_chromatic(g, "mv")[0]),
            "chi_mu_i": (chi_mu_i(g, budget)[0], brute_chromatic(g, "imv")[0]),
        }
        wrong = {name: v for name, v in pairs.items() if v[0] != v[1]}
        return None if not wrong else f"solver vs oracle: {wrong}"

    checks.forall("branch and bound agrees with enumeration", graphs, agree)
    return checks.results


def suite_names() -> List[str]:
    return list(SUITES) + ["all"]


def run_suite(name: str, node_budget: Optional[int] = None) -> List[SuiteReport]:
    """Run one suite, or every suite for ``all``; each suite gets its own budget."""
    if name == "all":
        names = list(SUITES)
    elif name in SUITES:
        names = [name]
    else:
        raise InputError(
            f"Unknown suite '{name}'", suggestion=f"Use one of: {', '.join(suite_names())}"
        )
    reports = []
    for suite_name in names:
        start = time.perf_counter()
        logger.info("running suite %s", suite_name)
        results = SUITES[suite_name](NodeBudget(node_budget, label=f"suite {suite_name}"))
        reports.append(
            SuiteReport(
                suite=suite_name,
                checks=results,
                elapsed_seconds=round(time.perf_counter() - start, 3),
            )
        )
    return reports
