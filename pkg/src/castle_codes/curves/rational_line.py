"""The projective line: Reed-Solomon codes as the genus-0 Castle case."""

from ..algebra.field import field_of_order
from ..algebra.semigroup import from_generators
from ..models.curve_models import CurveKind
from .base_curve import BaseCurve


class RationalLine(BaseCurve):
    """P^1 over GF(q) with Q at infinity; points are the q affine values of x."""

    kind = CurveKind.RATIONAL_LINE

    def __init__(self, q: int):
        self.q = q
        super().__init__(field_of_order(q), from_generators([1]), n=q, x_pole=1)

    @property
    def label(self) -> str:
        return f"rational_line(q={self.q})"

    def _scan_points(self) -> list[tuple[int, ...]]:
        return [(a,) for a in range(self.field.q)]

    def satisfies(self, point: tuple[int, ...]) -> bool:
        return len(point) == 1 and 0 <= point[0] < self.field.q


__all__ = ["RationalLine"]
