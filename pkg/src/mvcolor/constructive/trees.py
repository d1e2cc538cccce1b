"""Turning an MV coloring of a tree into an IMV coloring with no more classes.

Each round picks a monochromatic edge ``ab`` of color α and looks at the side
``W_ab`` of the tree closer to ``a``. For a second color β the exchange either
swaps ``a`` into β and the β-vertices of ``W_ab`` into α (when no β-vertex of
``W_ab`` hides another β-vertex on its path to ``a``), or swaps ``a`` into β and
one blocking β-vertex ``z`` into α. A candidate is accepted only if the result
is still an MV coloring with strictly fewer monochromatic edges.
"""

import logging
from typing import Iterator, List, Optional

from mvcolor.constructive.base import finish
from mvcolor.core.geodesic import geodesic_index, geodesic_path
from mvcolor.core.graph import Graph
from mvcolor.exceptions import PreconditionError
from mvcolor.models.coloring import Coloring, ConstructedColoring
from mvcolor.solvers.chromatic import chi_mu_i, is_valid_coloring

logger = logging.getLogger(__name__)


def _monochromatic(t: Graph, color: List[int]) -> List[tuple]:
    return [(a, b) for a, b in t.edges() if color[a] == color[b]]


def _candidates(t: Graph, color: List[int], a: int, b: int) -> Iterator[List[int]]:
    index = geodesic_index(t)
    side = [u for u in t if index.dist[u][a] < index.dist[u][b]]
    alpha = color[a]
    for beta in sorted(set(color) - {alpha}):
        betas = [u for u in side if color[u] == beta]
        inner = {}
        for y in betas:
            path = geodesic_path(t, y, a)
            inner[y] = [z for z in path[1:-1] if color[z] == beta]
        if not any(inner.values()):
            swapped = list(color)
            swapped[a] = beta
            for y in betas:
                swapped[y] = alpha
            yield swapped
        else:
            for y in betas:
                for z in inner[y]:
                    swapped = list(color)
                    swapped[a] = beta
                    swapped[z] = alpha
                    yield swapped


def _exchange_round(t: Graph, color: List[int]) -> Optional[List[int]]:
    current = len(_monochromatic(t, color))
    for a, b in _monochromatic(t, color):
        for x, y in ((a, b), (b, a)):
            for candidate in _candidates(t, color, x, y):
                if len(_monochromatic(t, candidate)) >= current:
                    continue
                if is_valid_coloring(t, Coloring(assignment=candidate), "mv"):
                    return candidate
    return None


def tree_exchange(t: Graph, start: Coloring) -> ConstructedColoring:
    """IMV coloring of the tree ``t`` with at most as many classes as ``start``."""
    if not t.is_tree() or t.n < 3:
        raise PreconditionError(f"tree_exchange needs a tree with n >= 3, got {t!r}")
    if not is_valid_coloring(t, start, "mv"):
        raise PreconditionError("tree_exchange needs a valid MV coloring to start from")

    color = list(start.normalized().assignment)
    rounds = 0
    while _monochromatic(t, color):
        step = _exchange_round(t, color)
        if step is None:
            k, exact = chi_mu_i(t)
            return finish(
                t,
                exact,
                "tree-exchange",
                "imv",
                max(start.k, k),
                notes={"rounds": rounds},
                anomaly=f"exchange stalled after {rounds} rounds; used the exact solver",
            )
        color = step
        rounds += 1
        logger.debug(
            "tree exchange round %d: %d monochromatic edges left",
            rounds,
            len(_monochromatic(t, color)),
        )
    return finish(
        t,
        Coloring(assignment=color).normalized(),
        "tree-exchange",
        "imv",
        start.k,
        notes={"rounds": rounds},
    )
