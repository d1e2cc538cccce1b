"""Colorings of graph products: lexicographic, Cartesian prisms and strong grids."""

import math
from typing import List

from tabulate import tabulate

from mvcolor.builders.families import complete_graph, path_graph
from mvcolor.builders.products import cartesian, factors, fiber, strong
from mvcolor.constructive.base import finish
from mvcolor.core.geodesic import require_connected
from mvcolor.core.graph import Graph
from mvcolor.exceptions import NoClosedFormError, PreconditionError
from mvcolor.models.coloring import Coloring, ConstructedColoring
from mvcolor.solvers.chromatic import chi, is_valid_coloring
from mvcolor.solvers.visibility import alpha


def product_coloring(g: Graph, mv: Coloring) -> ConstructedColoring:
    """Refine every MV class by an optimal proper coloring of the subgraph it induces."""
    if not is_valid_coloring(g, mv, "mv"):
        raise PreconditionError("product_coloring needs a valid MV coloring")
    chromatic, _ = chi(g)
    classes: List[List[int]] = []
    for members in mv.classes():
        sub, back = g.induced_subgraph(members)
        _, inner = chi(sub)
        classes.extend([back[v] for v in part] for part in inner.classes())
    return finish(
        g,
        Coloring.from_classes(classes, g.n),
        "product-imv",
        "imv",
        chromatic * mv.k,
        notes={"chi": chromatic, "mv_classes": mv.k},
    )


def _lex_factors(gh: Graph):
    if gh.product is None or gh.product.kind != "lex":
        raise PreconditionError(f"{gh!r} is not a lexicographic product")
    return factors(gh)


def lex_mv_2coloring(gh: Graph) -> ConstructedColoring:
    """{G^h, rest} with h the first vertex of H."""
    g, h = _lex_factors(gh)
    require_connected(g, "lex_mv_2coloring")
    if g.n < 2 or h.n < 2:
        raise PreconditionError("Both factors need at least two vertices")
    if g.is_complete() and h.is_complete():
        raise PreconditionError(
            "Both factors are complete, so the product is complete",
            suggestion="A complete graph has MV chromatic number 1",
        )
    layer = fiber(gh, "G", 0).to_list()
    rest = [v for v in gh if v not in set(layer)]
    return finish(gh, Coloring.from_classes([layer, rest], gh.n), "lex-mv2", "mv", 2)


def lex_imv(gh: Graph) -> ConstructedColoring:
    """An optimal proper coloring of G∘H, which is IMV since independent sets are."""
    g, h = _lex_factors(gh)
    require_connected(g, "lex_imv")
    if g.n < 2:
        raise PreconditionError("The left factor must not be K_1")
    if h.m == 0:
        raise PreconditionError("The right factor needs at least one edge")
    k, coloring = chi(gh)
    return finish(
        gh,
        coloring,
        "lex-imv",
        "imv",
        k,
        notes={"mu_i": alpha(g).value * alpha(h).value},
    )


def cartesian_prism_mv(g: Graph, n: int, imv: Coloring) -> ConstructedColoring:
    """MV coloring of G □ K_n giving (g, x) the IMV color of g."""
    if n < 1:
        raise PreconditionError(f"n must be >= 1, got {n}")
    if not is_valid_coloring(g, imv, "imv"):
        raise PreconditionError("cartesian_prism_mv needs a valid IMV coloring of the factor")
    prism = cartesian(g, complete_graph(n))
    assignment = [imv.assignment[prism.product.coordinates(v)[0]] for v in prism]
    return finish(prism, Coloring(assignment=assignment).normalized(), "prism-mv", "mv", imv.k)


def _grid_color(i: int, j: int, k: int) -> int:
    """1-based color of row i, column j in the 2k-color strong grid pattern."""
    ell = (j - 1) % k + 1
    quarter = (j - 1) // k
    diagonal = 2 * ell - 1 if quarter in (0, 3) else 2 * ell
    if (i - j) % 2 == 0:
        return diagonal
    return 4 * ell - 1 - diagonal


def strong_paths_imv(t: int, r: int) -> ConstructedColoring:
    """IMV coloring of P_t ⊠ P_r: 2k colors for r = 4k, four colors for 3 <= r <= 7."""
    if not t >= r >= 3:
        raise PreconditionError(f"strong_paths_imv needs t >= r >= 3, got t={t}, r={r}")
    if r <= 7:
        k = 2
        claimed = 4
    elif r % 4 == 0:
        k = r // 4
        claimed = 2 * k
    else:
        raise NoClosedFormError(
            f"No closed-form IMV coloring of P_{t} ⊠ P_{r}",
            suggestion="Use 'solve --param chimui' for the exact value",
        )
    g = strong(path_graph(t), path_graph(r))
    assignment = [_grid_color(i, j, k) - 1 for i in range(1, t + 1) for j in range(1, r + 1)]
    return finish(g, Coloring(assignment=assignment), "strongpaths-imv", "imv", claimed)


def _column_classes(m: int) -> List[List[int]]:
    """Groups of 1-based columns for the MV coloring along a side of length m >= 3."""
    if m == 3:
        return [[1, 3], [2]]
    if m % 2 == 0:
        half = m // 2
        return [[i, i + half] for i in range(1, half + 1)]
    return _column_classes(m - 1) + [[m]]


def strong_paths_mv(t: int, r: int) -> ConstructedColoring:
    """MV coloring of P_t ⊠ P_r with columns (or rows) of the shorter side grouped."""
    if min(t, r) < 2:
        raise PreconditionError(f"strong_paths_mv needs t, r >= 2, got t={t}, r={r}")
    g = strong(path_graph(t), path_graph(r))
    short = min(t, r)
    if short == 2:
        groups = [[1, 2]] if t == r else [[1], [2]]
        claimed = 1 if t == r else 2
    else:
        groups = _column_classes(short)
        claimed = math.ceil(short / 2)
    group_of = {line: index for index, group in enumerate(groups) for line in group}
    # index (i-1)*r + (j-1); group along columns when r is the short side
    assignment = [
        group_of[j] if r <= t else group_of[i]
        for i in range(1, t + 1)
        for j in range(1, r + 1)
    ]
    return finish(g, Coloring(assignment=assignment), "strongpaths-mv", "mv", claimed)


def render_grid(coloring: Coloring, t: int, r: int) -> List[List[int]]:
    """1-based color matrix of a coloring of P_t ⊠ P_r (rows from P_t)."""
    if coloring.n != t * r:
        raise PreconditionError(f"Coloring has {coloring.n} vertices, expected {t * r}")
    return [[coloring.assignment[i * r + j] + 1 for j in range(r)] for i in range(t)]


def render_grid_text(coloring: Coloring, t: int, r: int) -> str:
    return tabulate(render_grid(coloring, t, r), tablefmt="plain")
