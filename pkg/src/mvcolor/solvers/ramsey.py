"""K4-free partitions of E(K_n) and C4-free partitions of E(K_{r,s})."""

import logging
from itertools import combinations
from typing import Callable, Dict, List, Optional, Tuple, Union

from mvcolor.builders.families import biclique, complete_graph
from mvcolor.builders.products import subdivision
from mvcolor.core.bits import iter_bits
from mvcolor.core.budget import NodeBudget, as_budget
from mvcolor.exceptions import PreconditionError, ScaleLimitError, ValidationError
from mvcolor.models.ramsey import EdgePartition, SandwichReport
from mvcolor.solvers.chromatic import chi_mu, chi_mu_i

logger = logging.getLogger(__name__)

Budget = Union[NodeBudget, int, None]

DEFAULT_MAX_COMPLETE = 12
DEFAULT_MAX_BICLIQUE_EDGES = 36

# R(4^k) known exactly only for k <= 2
KNOWN_K4_RAMSEY = {1: 4, 2: 18}


def _search(
    edges: List[Tuple[int, int]],
    order: int,
    q: int,
    closes: Callable[[List[int], int, int], bool],
    budget: NodeBudget,
) -> Optional[List[int]]:
    """Assign classes to ``edges`` in order; ``closes`` rejects forbidden subgraphs."""
    adj = [[0] * order for _ in range(q)]
    labels = [-1] * len(edges)

    def extend(i: int, opened: int) -> bool:
        budget.tick()
        if i == len(edges):
            return True
        u, v = edges[i]
        for c in range(min(opened + 1, q)):
            if closes(adj[c], u, v):
                continue
            adj[c][u] |= 1 << v
            adj[c][v] |= 1 << u
            labels[i] = c
            if extend(i + 1, max(opened, c + 1)):
                return True
            adj[c][u] &= ~(1 << v)
            adj[c][v] &= ~(1 << u)
        labels[i] = -1
        return False

    return labels if extend(0, 0) else None


def _closes_k4(adj: List[int], u: int, v: int) -> bool:
    common = adj[u] & adj[v]
    return any(adj[w] & common for w in iter_bits(common))


def _closes_c4(adj: List[int], a: int, b: int) -> bool:
    # a on the left side, b on the right side
    return any(adj[b] & adj[other] for other in iter_bits(adj[a]))


def find_k4free_partition(
    n: int,
    q: int,
    budget: Budget = None,
    max_complete: int = DEFAULT_MAX_COMPLETE,
) -> Optional[EdgePartition]:
    """A q-class partition of E(K_n) with no monochromatic K_4, or None."""
    if n < 2 or q < 1:
        raise PreconditionError(f"Need n >= 2 and q >= 1, got n={n}, q={q}")
    if n > max_complete:
        raise ScaleLimitError(
            f"K_{n} is beyond the exhaustive-search limit of {max_complete} vertices",
            suggestion="Raise search.ramsey_max_complete to override",
        )
    budget = as_budget(budget, f"K4-free partition of K_{n}")
    edges = list(combinations(range(n), 2))
    labels = _search(edges, n, q, _closes_k4, budget)
    if labels is None:
        logger.debug("no %d-class K4-free partition of K_%d (%d nodes)", q, n, budget.nodes)
        return None
    return EdgePartition(
        host="complete",
        sizes=[n],
        forbidden="K4",
        edges=[(u, v, c) for (u, v), c in zip(edges, labels)],
    )


def find_c4free_partition(
    r: int,
    s: int,
    q: int,
    budget: Budget = None,
    max_edges: int = DEFAULT_MAX_BICLIQUE_EDGES,
) -> Optional[EdgePartition]:
    """A q-class partition of E(K_{r,s}) with no monochromatic C_4, or None."""
    if r < 1 or s < 1 or q < 1:
        raise PreconditionError(f"Need r, s, q >= 1, got r={r}, s={s}, q={q}")
    if r * s > max_edges:
        raise ScaleLimitError(
            f"K_{{{r},{s}}} has {r * s} edges, beyond the limit of {max_edges}",
            suggestion="Raise search.ramsey_max_biclique_edges to override",
        )
    budget = as_budget(budget, f"C4-free partition of K_{r},{s}")
    edges = [(a, r + b) for a in range(r) for b in range(s)]
    labels = _search(edges, r + s, q, _closes_c4, budget)
    if labels is None:
        return None
    return EdgePartition(
        host="biclique",
        sizes=[r, s],
        forbidden="C4",
        edges=[(u, v, c) for (u, v), c in zip(edges, labels)],
    )


def rho_with_partition(n: int, budget: Budget = None, **kwargs) -> Tuple[int, EdgePartition]:
    budget = as_budget(budget, f"rho({n})")
    q = 1
    while True:
        budget.bounds(lower=q)
        partition = find_k4free_partition(n, q, budget, **kwargs)
        if partition is not None:
            return q, partition
        q += 1


def rho(n: int, budget: Budget = None, **kwargs) -> int:
    """Fewest classes of a K4-free partition of E(K_n)."""
    return rho_with_partition(n, budget, **kwargs)[0]


def rho_rs_with_partition(
    r: int, s: int, budget: Budget = None, **kwargs
) -> Tuple[int, EdgePartition]:
    budget = as_budget(budget, f"rho({r},{s})")
    q = 1
    while True:
        budget.bounds(lower=q)
        partition = find_c4free_partition(r, s, q, budget, **kwargs)
        if partition is not None:
            return q, partition
        q += 1


def rho_rs(r: int, s: int, budget: Budget = None, **kwargs) -> int:
    """Fewest classes of a C4-free partition of E(K_{r,s})."""
    return rho_rs_with_partition(r, s, budget, **kwargs)[0]


def rho_bounds_from_ramsey(n: int) -> Tuple[int, Optional[int]]:
    """Bounds on ρ(n) from the known values R(4) = 4 and R(4,4) = 18.

    ρ(n) is the least k with R(4^k) > n; the upper end is None where it depends
    on an unknown Ramsey number.
    """
    if n < 2:
        raise PreconditionError(f"Need n >= 2, got {n}")
    for k in sorted(KNOWN_K4_RAMSEY):
        if n < KNOWN_K4_RAMSEY[k]:
            return k, k
    return max(KNOWN_K4_RAMSEY) + 1, None


def _class_adjacency(p: EdgePartition) -> Dict[int, Dict[int, set]]:
    adjacency: Dict[int, Dict[int, set]] = {}
    for u, v, c in p.edges:
        adjacency.setdefault(c, {}).setdefault(u, set()).add(v)
        adjacency[c].setdefault(v, set()).add(u)
    return adjacency


def _check_host(p: EdgePartition) -> None:
    if p.host == "complete":
        expected = set(combinations(range(p.sizes[0]), 2))
    else:
        r, s = p.sizes
        expected = {(a, r + b) for a in range(r) for b in range(s)}
    got = [(min(u, v), max(u, v)) for u, v, _ in p.edges]
    if len(got) != len(set(got)) or set(got) != expected:
        raise ValidationError(f"Partition does not cover each edge of {p.host_spec} exactly once")


def verify_k4free_partition(p: EdgePartition) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """First monochromatic K_4 as ``(class, vertices)`` by checking every 4-subset."""
    _check_host(p)
    adjacency = _class_adjacency(p)
    for quad in combinations(range(p.order), 4):
        for c, adj in adjacency.items():
            if all(b in adj.get(a, ()) for a, b in combinations(quad, 2)):
                return c, quad
    return None


def verify_c4free_partition(p: EdgePartition) -> Optional[Tuple[int, Tuple[int, ...]]]:
    """First monochromatic C_4 as ``(class, (a, a', b, b'))`` over all 2x2 subsets."""
    _check_host(p)
    r, s = p.sizes
    adjacency = _class_adjacency(p)
    for a1, a2 in combinations(range(r), 2):
        for b1, b2 in combinations(range(r, r + s), 2):
            for c, adj in adjacency.items():
                if all(b in adj.get(a, ()) for a in (a1, a2) for b in (b1, b2)):
                    return c, (a1, a2, b1, b2)
    return None


def sandwich_report(n: int, budget: Budget = None) -> SandwichReport:
    """ρ(n), χ_μ(S(K_n)) and χ_μᵢ(S(K_n)), all computed exactly."""
    budget = as_budget(budget, f"sandwich for K_{n}")
    host = subdivision(complete_graph(n))
    report = SandwichReport(
        host=f"complete:{n}",
        rho=rho(n, budget),
        chi_mu=chi_mu(host, budget)[0],
        chi_mu_i=chi_mu_i(host, budget)[0],
    )
    logger.info("sandwich %s: %s", report.host, report.model_dump())
    return report


def bipartite_sandwich_report(r: int, s: int, budget: Budget = None) -> SandwichReport:
    """ρ(r,s), χ_μ(S(K_{r,s})) and χ_μᵢ(S(K_{r,s})), all computed exactly.

    The upper end ρ + 1 is only asserted when both sides have at least two vertices.
    """
    budget = as_budget(budget, f"sandwich for K_{r},{s}")
    host = subdivision(biclique(r, s))
    report = SandwichReport(
        host=f"biclique:{r},{s}",
        rho=rho_rs(r, s, budget),
        chi_mu=chi_mu(host, budget)[0],
        chi_mu_i=chi_mu_i(host, budget)[0],
        upper_asserted=min(r, s) >= 2,
    )
    logger.info("sandwich %s: %s", report.host, report.model_dump())
    return report
