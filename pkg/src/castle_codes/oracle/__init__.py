"""Brute-force and generic-basis cross-checks."""

from .brute_force import brute_min_distance, brute_weight_distribution
from .generic_basis import (
    GenericBasisAnalysis,
    analyze,
    generic_dual_order_bound,
    generic_lambda,
    generic_n,
    generic_order_bound,
    rho,
    subset_order_bound,
    well_behaving,
)
from .verification import verify_model

__all__ = [
    "GenericBasisAnalysis",
    "analyze",
    "brute_min_distance",
    "brute_weight_distribution",
    "generic_dual_order_bound",
    "generic_lambda",
    "generic_n",
    "generic_order_bound",
    "rho",
    "subset_order_bound",
    "verify_model",
    "well_behaving",
]
