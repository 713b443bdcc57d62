"""Exact matching polynomials, root-wise vertex signs and per-root
Gallai-Edmonds style decompositions.

Polynomials are lists of integer coefficients in ascending order; a root
class is given by the coefficients of its irreducible minimal polynomial.
"""

from ._core import (
    CampaignError,
    Graph,
    InterlacingViolation,
    classify,
    decomposition,
    deficiency,
    enumerate_graphs,
    factor,
    fixtures,
    is_essential_path,
    lemmas,
    match_counts,
    matching_number,
    matching_polynomial,
    mu_by_edge_recurrence,
    mu_by_vertex_recurrence,
    poly_str,
    root_support,
    run_campaign,
    select_roots,
    verify_graph,
)

ZERO = [0, 1]

__all__ = [
    "CampaignError",
    "Graph",
    "InterlacingViolation",
    "ZERO",
    "classify",
    "decomposition",
    "deficiency",
    "enumerate_graphs",
    "factor",
    "fixtures",
    "is_essential_path",
    "lemmas",
    "match_counts",
    "matching_number",
    "matching_polynomial",
    "mu_by_edge_recurrence",
    "mu_by_vertex_recurrence",
    "poly_str",
    "root_support",
    "run_campaign",
    "select_roots",
    "verify_graph",
]
