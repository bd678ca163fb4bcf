"""Norm-trace curves N(x) = T(y) over GF(q^r)."""

from ..algebra.field import make_field, prime_power_parts
from ..algebra.semigroup import from_generators
from ..errors import CurveError
from ..models.curve_models import CurveKind
from .base_curve import BaseCurve


class NormTraceCurve(BaseCurve):
    """x^((q^r - 1)/(q - 1)) = y^(q^(r-1)) + ... + y^q + y over GF(q^r).

    Q is the unique pole of x, with v(x) = q^(r-1) and v(y) = (q^r - 1)/(q - 1).
    The curve has q^(2r-1) affine points.
    """

    kind = CurveKind.NORM_TRACE

    def __init__(self, q: int, r: int):
        if r < 2:
            raise CurveError(f"norm-trace degree r={r} must be at least 2")
        p, s = prime_power_parts(q)
        self.q = q
        self.r = r
        self._subdegree = s
        x_pole = q ** (r - 1)
        y_pole = (q**r - 1) // (q - 1)
        super().__init__(
            make_field(p, s * r),
            from_generators([x_pole, y_pole]),
            n=q ** (2 * r - 1),
            x_pole=x_pole,
            y_pole=y_pole,
        )

    @property
    def label(self) -> str:
        return f"norm_trace(q={self.q}, r={self.r})"

    def _scan_points(self) -> list[tuple[int, ...]]:
        field, s = self.field, self._subdegree
        traces: dict[int, list[int]] = {}
        for y in range(field.q):
            traces.setdefault(field.trace_code(y, s), []).append(y)
        points = []
        for x in range(field.q):
            for y in traces.get(field.norm_code(x, s), []):
                points.append((x, y))
        return points

    def satisfies(self, point: tuple[int, ...]) -> bool:
        x, y = point
        return self.field.norm_code(x, self._subdegree) == self.field.trace_code(y, self._subdegree)


__all__ = ["NormTraceCurve"]
