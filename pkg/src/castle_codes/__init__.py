"""Main package initialization."""

from .algebra import FieldSpec, NumericalSemigroup, from_generators, make_field
from .codes import BoundTable, CodeChain, bound_table_for, build_chain
from .curves import build_curve
from .decoding import build_context, decode
from .models import CurveKind, CurveSpec
from .protocols import CurveProtocol

__version__ = "0.1.0"

__all__ = [
    "BoundTable",
    "CodeChain",
    "CurveKind",
    "CurveProtocol",
    "CurveSpec",
    "FieldSpec",
    "NumericalSemigroup",
    "bound_table_for",
    "build_chain",
    "build_context",
    "build_curve",
    "decode",
    "from_generators",
    "make_field",
]
