"""Curve models and the factory that builds them from a CurveSpec."""

from ..errors import CurveError
from ..models.curve_models import CurveKind, CurveSpec
from .base_curve import (
    BaseCurve,
    enumerate_points,
    evaluate,
    monomial_for_pole,
    weierstrass_semigroup,
)
from .hermitian import HermitianCurve
from .norm_trace import NormTraceCurve
from .rational_line import RationalLine
from .semigroup_only import (
    SemigroupOnlyCurve,
    generalized_hermitian_semigroup_model,
    suzuki_semigroup_model,
)


def _need(value: int | None, name: str, kind: CurveKind) -> int:
    if value is None:
        raise CurveError(f"model {kind.value} needs --{name}")
    return value


def build_curve(spec: CurveSpec) -> BaseCurve:
    """Instantiate the curve described by ``spec``."""
    kind = spec.kind
    if kind is CurveKind.RATIONAL_LINE:
        return RationalLine(_need(spec.q, "q", kind))
    if kind is CurveKind.HERMITIAN:
        return HermitianCurve(_need(spec.q, "q", kind))
    if kind is CurveKind.NORM_TRACE:
        return NormTraceCurve(_need(spec.q, "q", kind), _need(spec.r, "r", kind))
    if kind is CurveKind.SUZUKI:
        return suzuki_semigroup_model(_need(spec.q0, "q0", kind))
    return generalized_hermitian_semigroup_model(_need(spec.q, "q", kind), _need(spec.r, "r", kind))


__all__ = [
    "BaseCurve",
    "HermitianCurve",
    "NormTraceCurve",
    "RationalLine",
    "SemigroupOnlyCurve",
    "build_curve",
    "enumerate_points",
    "evaluate",
    "generalized_hermitian_semigroup_model",
    "monomial_for_pole",
    "suzuki_semigroup_model",
    "weierstrass_semigroup",
]
