"""Curves known only through H(Q), n and the field: Suzuki and generalized Hermitian.

These models support dimension-set and bound computations; point enumeration and
evaluation raise ``CurveError``.
"""

from ..algebra.field import make_field, prime_power_parts
from ..algebra.semigroup import NumericalSemigroup, from_generators
from ..errors import CurveError
from ..models.curve_models import CurveKind
from .base_curve import BaseCurve


class SemigroupOnlyCurve(BaseCurve):
    """A curve model without points or function basis."""

    def __init__(self, kind: CurveKind, q: int, semigroup: NumericalSemigroup, n: int, label: str):
        self.kind = kind
        self.q = q
        self._label = label
        p, m = prime_power_parts(q)
        super().__init__(make_field(p, m), semigroup, n)

    @property
    def label(self) -> str:
        return self._label


def suzuki_semigroup_model(q0: int) -> SemigroupOnlyCurve:
    """Suzuki curve over GF(q), q = 2*q0^2: H(Q) = <q, q+q0, q+2q0, q+2q0+1>, n = q^2."""
    if q0 < 2 or q0 & (q0 - 1):
        raise CurveError(f"Suzuki parameter q0={q0} must be a power of 2, at least 2")
    q = 2 * q0 * q0
    semigroup = from_generators([q, q + q0, q + 2 * q0, q + 2 * q0 + 1])
    return SemigroupOnlyCurve(CurveKind.SUZUKI, q, semigroup, q * q, f"suzuki(q0={q0})")


def generalized_hermitian_semigroup_model(q: int, r: int) -> SemigroupOnlyCurve:
    """Generalized Hermitian curve over GF(q^r): H(Q) = <q^(r-1), q^(r-1)+q^(r-2), q^r+1>."""
    if r < 2:
        raise CurveError(f"generalized Hermitian degree r={r} must be at least 2")
    prime_power_parts(q)
    gens = [q ** (r - 1), q ** (r - 1) + q ** (r - 2), q**r + 1]
    return SemigroupOnlyCurve(
        CurveKind.GENERALIZED_HERMITIAN,
        q**r,
        from_generators(gens),
        q ** (2 * r - 1),
        f"generalized_hermitian(q={q}, r={r})",
    )


__all__ = ["SemigroupOnlyCurve", "suzuki_semigroup_model", "generalized_hermitian_semigroup_model"]
