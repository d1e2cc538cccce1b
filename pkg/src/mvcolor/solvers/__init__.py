"""Exact searches: visibility sets, chromatic numbers, Ramsey-type partitions."""

from mvcolor.solvers.chromatic import (
    bound_report,
    chi,
    chi_defective1,
    chi_mu,
    chi_mu_i,
    convex_path_lower_bound,
    find_coloring,
    greedy_coloring,
    is_valid_coloring,
    lower_bounds,
    strong_product_lower_bound,
    upper_bounds,
    validate_coloring,
)
from mvcolor.solvers.ramsey import (
    bipartite_sandwich_report,
    find_c4free_partition,
    find_k4free_partition,
    rho,
    rho_bounds_from_ramsey,
    rho_rs,
    sandwich_report,
    verify_c4free_partition,
    verify_k4free_partition,
)
from mvcolor.solvers.visibility import (
    VisibilityTracker,
    alpha,
    first_invisible_pair,
    is_imv_set,
    is_mv_set,
    is_visible_pair,
    mu,
    mu_i,
    omega,
)

__all__ = [
    "VisibilityTracker",
    "alpha",
    "bipartite_sandwich_report",
    "bound_report",
    "chi",
    "chi_defective1",
    "chi_mu",
    "chi_mu_i",
    "convex_path_lower_bound",
    "find_c4free_partition",
    "find_coloring",
    "find_k4free_partition",
    "first_invisible_pair",
    "greedy_coloring",
    "is_imv_set",
    "is_mv_set",
    "is_valid_coloring",
    "is_visible_pair",
    "lower_bounds",
    "mu",
    "mu_i",
    "omega",
    "rho",
    "rho_bounds_from_ramsey",
    "rho_rs",
    "sandwich_report",
    "strong_product_lower_bound",
    "upper_bounds",
    "validate_coloring",
    "verify_c4free_partition",
    "verify_k4free_partition",
]
