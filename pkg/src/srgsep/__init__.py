"""Clique/coclique separation of strongly regular graphs.

Build rank-3 graph families, compute exact spectral bounds, search for
maximum cliques and cocliques, and decide whether omega * alpha < nu.
"""

__version__ = "0.1.0"

from .bounds import ExactScalar, bound_report, delsarte_bound, eigenvalues, hoffman_bound, quick_verdict
from .classify import (
    OvoidStatus,
    Reason,
    Status,
    Verdict,
    classify_family,
    classify_graph,
    classify_params,
    ovoid_lookup,
    reproduce_table,
)
from .families import Family, FamilySpec, WitnessHint, generate, parse_spec
from .graph import DenseGraph, SrgParams, verify_srg
from .solver import Budget, SolveResult, SolveStatus, max_clique, max_coclique, seed_search, verify_witness

__all__ = [
    "Budget",
    "DenseGraph",
    "ExactScalar",
    "Family",
    "FamilySpec",
    "OvoidStatus",
    "Reason",
    "SolveResult",
    "SolveStatus",
    "SrgParams",
    "Status",
    "Verdict",
    "WitnessHint",
    "bound_report",
    "classify_family",
    "classify_graph",
    "classify_params",
    "delsarte_bound",
    "eigenvalues",
    "generate",
    "hoffman_bound",
    "max_clique",
    "max_coclique",
    "ovoid_lookup",
    "parse_spec",
    "quick_verdict",
    "reproduce_table",
    "seed_search",
    "verify_srg",
    "verify_witness",
]
