"""Exhaustive-enumeration oracles for cross-checking the branch-and-bound solvers.

Nothing here prunes: sets are tried by decreasing size and colorings by
restricted growth strings, so the answers depend only on the validity checks.
Only usable for tiny graphs.
"""

from functools import lru_cache
from itertools import combinations
from typing import Callable, Iterator, List, Tuple

from mvcolor.core.bits import bits_to_list, popcount
from mvcolor.core.geodesic import require_connected
from mvcolor.core.graph import Graph
from mvcolor.exceptions import InputError, ScaleLimitError
from mvcolor.models.coloring import MODES, Coloring
from mvcolor.solvers.visibility import is_imv_set, is_mv_set

MAX_ORDER = 10


def _check_order(g: Graph) -> None:
    if g.n > MAX_ORDER:
        raise ScaleLimitError(f"Exhaustive oracle refuses n={g.n} > {MAX_ORDER}")


def _largest(g: Graph, accept) -> Tuple[int, List[int]]:
    _check_order(g)
    for size in range(g.n, 0, -1):
        for subset in combinations(range(g.n), size):
            if accept(g, list(subset)):
                return size, list(subset)
    return 0, []


def brute_mu(g: Graph) -> Tuple[int, List[int]]:
    return _largest(g, is_mv_set)


def brute_mu_i(g: Graph) -> Tuple[int, List[int]]:
    return _largest(g, is_imv_set)


def brute_alpha(g: Graph) -> Tuple[int, List[int]]:
    return _largest(g, lambda h, s: h.is_independent(sum(1 << v for v in s)))


def restricted_growth(n: int, k: int) -> Iterator[List[int]]:
    """Every assignment of ``n`` vertices to at most ``k`` unlabeled classes."""
    if n == 0:
        yield []
        return
    word = [0] * n

    def extend(i: int, used: int) -> Iterator[List[int]]:
        if i == n:
            yield list(word)
            return
        for c in range(min(used + 1, k)):
            word[i] = c
            yield from extend(i + 1, max(used, c + 1))

    yield from extend(1, 1)


def _class_rule(g: Graph, mode: str) -> Callable[[int], bool]:
    """Validity of a single class, given as a vertex mask, cached per mask."""
    if mode not in MODES:
        raise InputError(
            f"Unknown coloring mode '{mode}'", suggestion=f"Use one of {', '.join(MODES)}"
        )
    if mode in ("mv", "imv") and g.n > 1:
        require_connected(g, "exhaustive MV coloring")

    @lru_cache(maxsize=None)
    def valid(mask: int) -> bool:
        members = bits_to_list(mask)
        if mode in ("proper", "imv") and not g.is_independent(mask):
            return False
        if mode == "defective1":
            return all(popcount(g.rows[u] & mask) <= 1 for u in members)
        if mode in ("mv", "imv"):
            return is_mv_set(g, members)
        return True

    return valid


def brute_chromatic(g: Graph, mode: str) -> Tuple[int, Coloring]:
    """Fewest classes of a valid ``mode`` coloring by trying every partition."""
    _check_order(g)
    valid = _class_rule(g, mode)
    for k in range(1, g.n + 1):
        for word in restricted_growth(g.n, k):
            masks = [0] * k
            for v, c in enumerate(word):
                masks[c] |= 1 << v
            if all(valid(mask) for mask in masks if mask):
                coloring = Coloring(assignment=word)
                return coloring.k, coloring
    return 0, Coloring(assignment=[])
