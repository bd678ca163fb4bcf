"""Hermitian curves y^q + y = x^(q+1) over GF(q^2)."""

from ..models.curve_models import CurveKind
from .norm_trace import NormTraceCurve


class HermitianCurve(NormTraceCurve):
    """The norm-trace curve with r = 2: genus q(q-1)/2, q^3 affine points, H(Q) = <q, q+1>."""

    kind = CurveKind.HERMITIAN

    def __init__(self, q: int):
        super().__init__(q, 2)

    @property
    def label(self) -> str:
        return f"hermitian(q={self.q})"


__all__ = ["HermitianCurve"]
