"""IMV colorings of triangle-free graphs from a maximum IMV set."""

import math
from itertools import combinations
from typing import List, Optional, Sequence

from mvcolor.builders.families import sharpness_gadget
from mvcolor.constructive.base import finish
from mvcolor.core.bits import bits_to_list, mask_of, popcount
from mvcolor.core.geodesic import require_connected
from mvcolor.core.graph import Graph
from mvcolor.exceptions import PreconditionError
from mvcolor.models.coloring import Coloring, ConstructedColoring
from mvcolor.solvers.visibility import is_imv_set, mu_i


def _is_edge_pair(g: Graph, mask: int) -> bool:
    if popcount(mask) != 2:
        return False
    u, v = bits_to_list(mask)
    return g.has_edge(u, v)


def _is_claw(g: Graph, mask: int) -> Optional[int]:
    """Center of ``g[mask]`` if it is K_{1,3}."""
    members = bits_to_list(mask)
    if len(members) != 4:
        return None
    for c in members:
        if g.rows[c] & mask == mask & ~(1 << c) and g.is_independent(mask & ~(1 << c)):
            return c
    return None


def _peel(g: Graph, rest: int) -> List[List[int]]:
    """Split ``rest`` into independent pairs, ending with a single or a claw's leaf triple."""
    parts: List[List[int]] = []
    while rest:
        members = bits_to_list(rest)
        if len(members) == 1:
            parts.append(members)
            break
        center = _is_claw(g, rest)
        if center is not None:
            parts.append([v for v in members if v != center])
            parts.append([center])
            break
        chosen = None
        fallback = None
        for u, v in combinations(members, 2):
            if g.has_edge(u, v):
                continue
            if fallback is None:
                fallback = (u, v)
            if not _is_edge_pair(g, rest & ~(1 << u) & ~(1 << v)):
                chosen = (u, v)
                break
        pick = chosen or fallback
        if pick is None:
            # a clique of a triangle-free graph: one vertex at a time
            pick = (members[0],)
        parts.append(list(pick))
        rest &= ~mask_of(pick)
    return parts


def trianglefree_imv(g: Graph, imv_set: Optional[Sequence[int]] = None) -> ConstructedColoring:
    """At most ⌈(n - μᵢ)/2⌉ + 1 IMV classes; ``imv_set`` must be a maximum IMV set."""
    require_connected(g, "trianglefree_imv")
    if g.n < 2:
        raise PreconditionError("trianglefree_imv needs at least two vertices")
    triangle = g.find_triangle()
    if triangle is not None:
        raise PreconditionError(
            "Graph is not triangle-free",
            details=f"triangle on vertices {list(triangle)}",
        )
    if imv_set is None:
        imv_set = mu_i(g).witness
    elif not is_imv_set(g, list(imv_set)):
        raise PreconditionError("Supplied set is not an IMV set")

    m = mask_of(imv_set)
    claimed = math.ceil((g.n - len(imv_set)) / 2) + 1
    rest = g.full_mask & ~m
    if _is_edge_pair(g, rest):
        x, y = bits_to_list(rest)
        classes = [list(g.neighbors(x)), list(g.neighbors(y))]
    else:
        classes = [bits_to_list(m)] + _peel(g, rest)
    return finish(
        g,
        Coloring.from_classes(classes, g.n),
        "tfree-imv",
        "imv",
        claimed,
        notes={"mu_i": len(imv_set)},
    )


def sharpness_coloring(k: int, r: int) -> ConstructedColoring:
    """The k+1 class IMV coloring showing the triangle-free bound is attained."""
    g = sharpness_gadget(k, r)
    p = 2 * k - 1
    path_color = [2 * ((j - 1) // 4) + 1 + (j - 1) % 2 for j in range(1, p + 1)]
    assignment = path_color + [0] * (p * r)
    assignment.append(path_color[p - 1] if k % 2 else path_color[p - 2])
    return finish(
        g,
        Coloring(assignment=assignment).normalized(),
        "tfree-sharpness",
        "imv",
        k + 1,
        notes={"mu_i": p * r},
    )
