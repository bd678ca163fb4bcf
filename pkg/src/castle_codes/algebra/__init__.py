"""Finite fields, numerical semigroups and linear algebra over finite fields."""

from .field import (
    FieldElement,
    FieldSpec,
    field_of_order,
    frobenius_power,
    make_field,
    norm_to,
    prime_power_parts,
    trace_to,
)
from .linalg import (
    FieldMatrix,
    FieldVector,
    rank_of_rows,
    hamming_distance,
    inner,
    star,
    weight,
)
from .semigroup import (
    LgmBound,
    NumericalSemigroup,
    apery_set,
    from_generators,
    genus_two_generators,
    is_symmetric,
    lgm_bound,
    scaled_sumset,
    shifted_complement,
)

__all__ = [
    # Fields
    "FieldElement",
    "FieldSpec",
    "field_of_order",
    "frobenius_power",
    "make_field",
    "norm_to",
    "prime_power_parts",
    "trace_to",
    # Linear algebra
    "FieldMatrix",
    "FieldVector",
    "rank_of_rows",
    "hamming_distance",
    "inner",
    "star",
    "weight",
    # Semigroups
    "LgmBound",
    "NumericalSemigroup",
    "apery_set",
    "from_generators",
    "genus_two_generators",
    "is_symmetric",
    "lgm_bound",
    "scaled_sumset",
    "shifted_complement",
]
