"""Brute-force matrix realizations used as an independent check of the scalar engine."""
from .realization import (
    AmbientMissing,
    BudgetExceeded,
    EigenvalueCollision,
    Module,
    ReducibleRequest,
    RepInvariantError,
    RepRealization,
)
from .reps import (
    build_rep,
    dirac_rep,
    exterior_rep,
    gamma_matrices,
    middle_forms,
    natural_rep,
    spinor_rep,
    tensor_with_natural,
    trivial_rep,
)
from .enveloping import e_hat_power, e_power, pf_elements

__all__ = [
    "AmbientMissing",
    "BudgetExceeded",
    "EigenvalueCollision",
    "Module",
    "ReducibleRequest",
    "RepInvariantError",
    "RepRealization",
    "build_rep",
    "dirac_rep",
    "exterior_rep",
    "gamma_matrices",
    "middle_forms",
    "natural_rep",
    "spinor_rep",
    "tensor_with_natural",
    "trivial_rep",
    "e_hat_power",
    "e_power",
    "pf_elements",
]
