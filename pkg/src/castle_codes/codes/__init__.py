"""One-point codes, their bounds and a seeded channel."""

from .bounds import (
    BoundTable,
    build_bound_table,
    d_ord,
    d_ord_dual,
    goppa_dominance_report,
    improved_code,
    improved_code_report,
    improved_dimension,
    improved_support,
    lambda_star_size,
    lambda_star_size_castle,
    monotone_deltas,
    nstar_size,
    order_bound_for_m,
)
from .chain import (
    CodeChain,
    OnePointCode,
    bound_table_for,
    build_chain,
    code_at,
    code_parameters,
    decode_message,
    dimension_set_only,
    dual_code,
    encode,
    exact_distance_castle,
    goppa_bound,
    goppa_witness,
    improved_goppa_bound,
    rank_dimension_set,
)
from .channel import make_rng, random_error, transmit

__all__ = [
    # Chain
    "CodeChain",
    "OnePointCode",
    "bound_table_for",
    "build_chain",
    "code_at",
    "code_parameters",
    "decode_message",
    "dimension_set_only",
    "dual_code",
    "encode",
    "exact_distance_castle",
    "goppa_bound",
    "goppa_witness",
    "improved_goppa_bound",
    "rank_dimension_set",
    # Bounds
    "BoundTable",
    "build_bound_table",
    "d_ord",
    "d_ord_dual",
    "goppa_dominance_report",
    "improved_code",
    "improved_code_report",
    "improved_dimension",
    "improved_support",
    "lambda_star_size",
    "lambda_star_size_castle",
    "monotone_deltas",
    "nstar_size",
    "order_bound_for_m",
    # Channel
    "make_rng",
    "random_error",
    "transmit",
]
