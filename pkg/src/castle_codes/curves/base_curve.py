"""Base curve class shared by every curve model.

Concrete families override :meth:`BaseCurve._scan_points`; semigroup-level families leave
it alone and only answer semigroup queries.
"""

import logging
from collections import defaultdict
from typing import Optional

from ..algebra.field import FieldSpec
from ..algebra.linalg import FieldVector
from ..algebra.semigroup import NumericalSemigroup, is_symmetric
from ..config import get_settings
from ..errors import CurveError, SemigroupError
from ..models.curve_models import CurveKind, CurveSummary, MonomialFunction

logger = logging.getLogger(__name__)


class BaseCurve:
    """A curve with a distinguished rational point Q.

    Implements CurveProtocol.

    Attributes:
        kind: Curve family
        field: Field of definition
        semigroup: Weierstrass semigroup H(Q)
        n: Number of rational points other than Q
        genus: Genus g of H(Q)
        x_pole: Pole order v(x) of the first coordinate function
        y_pole: Pole order v(y), or None when the model has no y
    """

    kind: CurveKind

    def __init__(
        self,
        field: FieldSpec,
        semigroup: NumericalSemigroup,
        n: int,
        x_pole: Optional[int] = None,
        y_pole: Optional[int] = None,
    ):
        self.field = field
        self.semigroup = semigroup
        self.n = n
        self.genus = semigroup.genus
        self.x_pole = x_pole
        self.y_pole = y_pole
        self._points: list[tuple[int, ...]] = []
        if self.is_concrete:
            cap = get_settings().max_points
            if n > cap:
                raise CurveError(f"{self.label} has {n} points, above the supported {cap}")
            self._points = self._scan_points()
            if len(self._points) != n:
                raise CurveError(f"{self.label}: found {len(self._points)} points, expected {n}")
            logger.info(f"Enumerated {n} points on {self.label} over {field.name}")

    @property
    def is_concrete(self) -> bool:
        return self.kind.is_concrete

    @property
    def label(self) -> str:
        return self.kind.value

    def _scan_points(self) -> list[tuple[int, ...]]:
        raise CurveError(f"{self.label} is only available at semigroup level")

    def _require_concrete(self, what: str) -> None:
        if not self.is_concrete:
            raise CurveError(f"{what} is not available for the semigroup-level model {self.label}")

    # -- CurveProtocol ----------------------------------------------------------------------

    def enumerate_points(self) -> list[tuple[int, ...]]:
        self._require_concrete("point enumeration")
        return list(self._points)

    def monomial_for_pole(self, m: int) -> MonomialFunction:
        """Unique x^lam y^mu with lam*v(x) + mu*v(y) = m and 0 <= mu < v(x)."""
        self._require_concrete("an explicit function basis")
        if m not in self.semigroup:
            raise SemigroupError(f"{m} is not a pole number of {self.semigroup!r}")
        a, b = self.x_pole, self.y_pole
        assert a is not None
        if b is None:
            lam, mu = divmod(m, a)
            if mu:
                raise SemigroupError(f"{m} is not a multiple of v(x) = {a}")
            return MonomialFunction(lam=lam, mu=0, pole_order=m)
        mu = (m * pow(b, -1, a)) % a
        lam, rest = divmod(m - mu * b, a)
        if lam < 0 or rest:
            raise SemigroupError(f"{m} has no representation lam*{a} + mu*{b}")
        return MonomialFunction(lam=lam, mu=mu, pole_order=m)

    def evaluate(self, f: MonomialFunction, point: tuple[int, ...]) -> int:
        field = self.field
        value = field.pow(point[0], f.lam)
        if f.mu:
            value = field.mul(value, field.pow(point[1], f.mu))
        return value

    # -- derived --------------------------------------------------------------------------

    def evaluate_all(self, f: MonomialFunction) -> FieldVector:
        """ev(f) over all points, in enumeration order."""
        self._require_concrete("evaluation")
        return FieldVector(self.field, [self.evaluate(f, P) for P in self._points])

    def satisfies(self, point: tuple[int, ...]) -> bool:
        """Whether ``point`` lies on the affine model."""
        self._require_concrete("a curve equation")
        raise CurveError(f"{self.label} does not define a curve equation")

    def x_fibers(self) -> dict[int, list[int]]:
        """Point indices grouped by x-coordinate."""
        self._require_concrete("x fibers")
        fibers: dict[int, list[int]] = defaultdict(list)
        for index, point in enumerate(self._points):
            fibers[point[0]].append(index)
        return dict(fibers)

    def is_castle(self) -> bool:
        """Symmetric H(Q) and n = q * v_2."""
        return is_symmetric(self.semigroup) and self.n == self.field.q * self.semigroup.multiplicity

    def summary(self) -> CurveSummary:
        return CurveSummary(
            kind=self.kind,
            field=self.field.name,
            genus=self.genus,
            n=self.n,
            generators=list(self.semigroup.generators),
            castle=self.is_castle(),
        )

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.label}, {self.field.name}, n={self.n}, g={self.genus})"


def weierstrass_semigroup(curve: BaseCurve) -> NumericalSemigroup:
    return curve.semigroup


def enumerate_points(curve: BaseCurve) -> list[tuple[int, ...]]:
    return curve.enumerate_points()


def monomial_for_pole(curve: BaseCurve, m: int) -> MonomialFunction:
    return curve.monomial_for_pole(m)


def evaluate(curve: BaseCurve, f: MonomialFunction, point: tuple[int, ...]) -> int:
    return curve.evaluate(f, point)


__all__ = [
    "BaseCurve",
    "weierstrass_semigroup",
    "enumerate_points",
    "monomial_for_pole",
    "evaluate",
]
