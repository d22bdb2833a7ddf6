"""Exact representation-theoretic engine for Bochner-Weitzenboeck formulas of so(n) gradients."""
from .weights import (
    DominantWeight,
    WeightContext,
    delta,
    dim,
    inner,
    lex_compare,
    parse_weight,
    validate_weight,
)
from .branching import Decomposition, Summand, decompose, summand_count
from .casimir import (
    casimir2,
    casimir_hat_q,
    casimir_q,
    casimir_table,
    conformal_weight,
    pfaffian_eigenvalue,
)

__all__ = [
    "DominantWeight",
    "WeightContext",
    "delta",
    "dim",
    "inner",
    "lex_compare",
    "parse_weight",
    "validate_weight",
    "Decomposition",
    "Summand",
    "decompose",
    "summand_count",
    "casimir2",
    "casimir_hat_q",
    "casimir_q",
    "casimir_table",
    "conformal_weight",
    "pfaffian_eigenvalue",
]
