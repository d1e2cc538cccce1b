"""Reduction gadgets for the IMV problems and their brute-force validators.

Two reductions live here. ``build_corona_reduction`` maps a graph H to K_1 ⊙ H, on
which IMV sets are exactly independent sets. ``build_sat_gadget`` maps a CNF
formula with at most three literals per clause to a diameter-4 graph whose IMV
number equals its independence number exactly when the formula is satisfiable.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Dict, List, Optional

from pydantic import ValidationError as PydanticValidationError

from mvcolor.builders.families import complete_graph
from mvcolor.builders.products import corona
from mvcolor.core.geodesic import diameter, require_connected
from mvcolor.core.graph import Graph
from mvcolor.exceptions import InputError, ParseError, ScaleLimitError, ValidationError
from mvcolor.models.cnf import Cnf3
from mvcolor.models.hardness import CoronaReport, GadgetCheck, SatReductionReport
from mvcolor.solvers.chromatic import chi, chi_mu_i
from mvcolor.solvers.visibility import alpha, is_imv_set, mu_i

logger = logging.getLogger(__name__)

MAX_TRUTH_TABLE_VARS = 20
DEFAULT_SAT_MAX_VARS = 3
DEFAULT_SAT_MAX_CLAUSES = 4
DEFAULT_CORONA_MAX_ORDER = 7


# DIMACS


def parse_dimacs(text: str) -> Cnf3:
    """Parse the ``p cnf a b`` subset of DIMACS; clauses end with ``0``."""
    header = None
    clauses: List[List[int]] = []
    current: List[int] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("c") or line.startswith("%"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if header is not None:
                raise ParseError("Second problem line", details=f"line {lineno}")
            if len(parts) != 4 or parts[1] != "cnf":
                raise ParseError(
                    "Problem line must be 'p cnf <vars> <clauses>'", details=f"line {lineno}"
                )
            try:
                header = (int(parts[2]), int(parts[3]))
            except ValueError:
                raise ParseError("Non-integer in problem line", details=f"line {lineno}") from None
            continue
        if header is None:
            raise ParseError("Clause before the problem line", details=f"line {lineno}")
        for token in line.split():
            try:
                lit = int(token)
            except ValueError:
                raise ParseError(
                    f"Non-integer literal {token!r}", details=f"line {lineno}"
                ) from None
            if lit == 0:
                clauses.append(current)
                current = []
            else:
                current.append(lit)
    if header is None:
        raise ParseError("Missing problem line", suggestion="Start with 'p cnf <vars> <clauses>'")
    if current:
        raise ParseError("Last clause is not terminated by 0")
    num_vars, num_clauses = header
    if len(clauses) != num_clauses:
        raise ParseError(f"Problem line announces {num_clauses} clauses, found {len(clauses)}")
    return make_cnf(num_vars, clauses)


def make_cnf(num_vars: int, clauses: List[List[int]]) -> Cnf3:
    """Build a Cnf3, turning model validation failures into InputError."""
    try:
        return Cnf3(num_vars=num_vars, clauses=clauses)
    except PydanticValidationError as e:
        first = e.errors()[0]
        raise InputError("Invalid CNF formula", details=first.get("msg")) from None


def format_dimacs(cnf: Cnf3) -> str:
    lines = [f"p cnf {cnf.num_vars} {cnf.num_clauses}"]
    lines.extend(" ".join(str(lit) for lit in clause) + " 0" for clause in cnf.clauses)
    return "\n".join(lines) + "\n"


def is_satisfiable(cnf: Cnf3) -> Optional[List[bool]]:
    """First satisfying assignment in truth-table order (all False first), or None."""
    if cnf.num_vars > MAX_TRUTH_TABLE_VARS:
        raise ScaleLimitError(
            f"Truth table over {cnf.num_vars} variables is beyond {MAX_TRUTH_TABLE_VARS}"
        )
    for values in itertools.product((False, True), repeat=cnf.num_vars):
        if cnf.satisfied_by(list(values)):
            return list(values)
    return None


def figure_instance() -> Cnf3:
    """Four variables, four clauses, satisfied by (True, False, True, False)."""
    return Cnf3(num_vars=4, clauses=[[1, 2, -3], [-1, -2, 4], [-2, 3, 4], [-1, -3, -4]])


# SAT gadget


@dataclass(frozen=True)
class GadgetLayout:
    """Vertex indices of the SAT gadget for ``a`` variables and ``b`` clauses.

    ``c`` is vertex 0, clause ``j`` (1-based) owns ``2j-1`` and ``2j``, variable ``i``
    owns five consecutive vertices p, p', q, r, s, and the triangle x, y, z comes last.
    """

    a: int
    b: int

    @property
    def order(self) -> int:
        return 5 * self.a + 2 * self.b + 4

    @property
    def c(self) -> int:
        return 0

    def clause(self, j: int) -> int:
        return 2 * j - 1

    def clause_tail(self, j: int) -> int:
        return 2 * j

    def variable(self, i: int) -> Dict[str, int]:
        base = 2 * self.b + 1 + 5 * (i - 1)
        return dict(zip(("p", "p'", "q", "r", "s"), range(base, base + 5)))

    @property
    def triangle(self) -> Dict[str, int]:
        base = 2 * self.b + 1 + 5 * self.a
        return {"x": base, "y": base + 1, "z": base + 2}


def build_sat_gadget(cnf: Cnf3) -> Graph:
    layout = GadgetLayout(cnf.num_vars, cnf.num_clauses)
    labels = [""] * layout.order
    labels[layout.c] = "c"
    edges = []
    for j in range(1, layout.b + 1):
        labels[layout.clause(j)] = f"c{j}"
        labels[layout.clause_tail(j)] = f"c{j}'"
        edges.append((layout.clause(j), layout.clause_tail(j)))
        edges.append((layout.c, layout.clause_tail(j)))

    t = layout.triangle
    for name, v in t.items():
        labels[v] = name
    edges.extend([(t["x"], t["y"]), (t["y"], t["z"]), (t["x"], t["z"])])

    for i in range(1, layout.a + 1):
        tree = layout.variable(i)
        for name, v in tree.items():
            labels[v] = name.replace("'", "") + str(i) + ("'" if name == "p'" else "")
        edges.extend(
            [
                (tree["p"], tree["p'"]),
                (tree["p'"], tree["q"]),
                (tree["q"], tree["r"]),
                (tree["q"], tree["s"]),
                (t["x"], tree["p"]),
                (t["x"], tree["p'"]),
                (t["y"], tree["r"]),
                (t["y"], tree["s"]),
                (layout.c, tree["r"]),
                (layout.c, tree["s"]),
            ]
        )

    for j, clause in enumerate(cnf.clauses, start=1):
        for lit in clause:
            tree = layout.variable(abs(lit))
            edges.append((layout.clause(j), tree["p"] if lit > 0 else tree["p'"]))

    return Graph(layout.order, edges, labels=labels, name=f"sat-gadget({layout.a},{layout.b})")


def gadget_check(cnf: Cnf3, g: Optional[Graph] = None) -> GadgetCheck:
    """Compare a gadget's order, size and diameter with 5a+2b+4, 10a+2b+3+L and 4."""
    g = g if g is not None else build_sat_gadget(cnf)
    a, b = cnf.num_vars, cnf.num_clauses
    return GadgetCheck(
        order=g.n,
        expected_order=5 * a + 2 * b + 4,
        size=g.m,
        expected_size=10 * a + 2 * b + 3 + cnf.literal_occurrences,
        diameter=diameter(g),
    )


def imv_set_from_assignment(cnf: Cnf3, assignment: List[bool]) -> List[int]:
    """Clause tails, every r and s, z, and per variable p if False else p'."""
    if len(assignment) != cnf.num_vars:
        raise InputError(
            f"Assignment has {len(assignment)} values for {cnf.num_vars} variables"
        )
    layout = GadgetLayout(cnf.num_vars, cnf.num_clauses)
    members = [layout.clause_tail(j) for j in range(1, layout.b + 1)]
    for i, value in enumerate(assignment, start=1):
        tree = layout.variable(i)
        members.extend([tree["r"], tree["s"], tree["p'"] if value else tree["p"]])
    members.append(layout.triangle["z"])
    return sorted(members)


def verify_sat_reduction(
    cnf: Cnf3,
    max_vars: int = DEFAULT_SAT_MAX_VARS,
    max_clauses: int = DEFAULT_SAT_MAX_CLAUSES,
    budget=None,
) -> SatReductionReport:
    """Decide both sides of the reduction by exhaustive search and report them."""
    if cnf.num_vars > max_vars or cnf.num_clauses > max_clauses:
        raise ScaleLimitError(
            f"Formula has {cnf.num_vars} variables and {cnf.num_clauses} clauses",
            details=f"limit is {max_vars} variables and {max_clauses} clauses",
            suggestion="Raise search.sat_max_vars / search.sat_max_clauses to override",
        )
    g = build_sat_gadget(cnf)
    assignment = is_satisfiable(cnf)
    independent = alpha(g, budget)
    best = mu_i(g, budget)
    from_assignment: List[int] = []
    if assignment is not None:
        from_assignment = imv_set_from_assignment(cnf, assignment)
        if not is_imv_set(g, from_assignment):
            raise ValidationError(
                "Set built from a satisfying assignment is not IMV",
                details=f"assignment {assignment}",
            )
    report = SatReductionReport(
        num_vars=cnf.num_vars,
        num_clauses=cnf.num_clauses,
        satisfiable=assignment is not None,
        assignment=assignment,
        alpha=independent.value,
        mu_i=best.value,
        alpha_witness=independent.witness,
        mu_i_witness=best.witness,
        imv_from_assignment=from_assignment,
        extension=any(len(clause) < 3 for clause in cnf.clauses),
        gadget=gadget_check(cnf, g),
    )
    if not report.holds:
        logger.warning("reduction iff fails for %s", format_dimacs(cnf).strip())
    return report


def random_cnf(seed: int, num_vars: int, num_clauses: int) -> Cnf3:
    """Random non-tautological formula with one to three literals per clause."""
    rng = random.Random(seed)
    clauses = []
    for _ in range(num_clauses):
        size = rng.randint(1, min(3, num_vars))
        variables = rng.sample(range(1, num_vars + 1), size)
        clauses.append([v if rng.random() < 0.5 else -v for v in variables])
    return Cnf3(num_vars=num_vars, clauses=clauses)


# corona


def build_corona_reduction(h: Graph) -> Graph:
    """K_1 ⊙ H; the universal vertex is 0 and H occupies ``1..n(H)``."""
    return corona(complete_graph(1), h)


def verify_corona_reduction(
    h: Graph, max_order: int = DEFAULT_CORONA_MAX_ORDER, budget=None
) -> CoronaReport:
    """μᵢ and χ_μᵢ of K_1 ⊙ H against α(H) and χ(H) + 1."""
    if h.n > max_order:
        raise ScaleLimitError(
            f"H has {h.n} vertices, beyond the brute-force limit of {max_order}",
            suggestion="Raise search.brute_force_max_order to override",
        )
    g = build_corona_reduction(h)
    report = CoronaReport(
        order=h.n,
        alpha=alpha(h, budget).value,
        chi=chi(h, budget)[0],
        mu_i=mu_i(g, budget).value,
        chi_mu_i=chi_mu_i(g, budget, shortcuts=False)[0],
    )
    if not report.holds:
        logger.warning("corona reduction fails on %r", h)
    return report


def corona_law(g: Graph, h: Graph, budget=None) -> Dict[str, int]:
    """μᵢ(G ⊙ H) next to n(G)·α(H)."""
    require_connected(g, "corona_law")
    product = corona(g, h)
    return {
        "mu_i": mu_i(product, budget).value,
        "expected": g.n * alpha(h, budget).value,
    }
