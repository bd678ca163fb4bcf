"""Majority-voting decoder."""

from .feng_rao import (
    DecoderContext,
    SyndromeState,
    build_context,
    decode,
    designed_distance,
    dual_basis,
    predicted_entry,
    product_coordinates,
    syndrome_matrix_rank,
)

__all__ = [
    "DecoderContext",
    "SyndromeState",
    "build_context",
    "decode",
    "designed_distance",
    "dual_basis",
    "predicted_entry",
    "product_coordinates",
    "syndrome_matrix_rank",
]
