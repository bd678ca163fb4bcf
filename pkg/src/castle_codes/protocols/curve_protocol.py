"""Protocol defining the interface of a pointed curve model."""

from typing import Protocol, runtime_checkable

from ..algebra.field import FieldSpec
from ..algebra.semigroup import NumericalSemigroup
from ..models.curve_models import CurveKind, MonomialFunction


@runtime_checkable
class CurveProtocol(Protocol):
    """What code construction needs from a curve.

    Semigroup-level models implement the same interface but raise ``CurveError`` from
    the point and function methods.
    """

    kind: CurveKind
    field: FieldSpec
    semigroup: NumericalSemigroup
    n: int
    genus: int

    def enumerate_points(self) -> list[tuple[int, ...]]:
        """Rational points other than Q, in lexicographic code order."""
        ...

    def monomial_for_pole(self, m: int) -> MonomialFunction:
        """The basis function with pole order ``m`` at Q."""
        ...

    def evaluate(self, f: MonomialFunction, point: tuple[int, ...]) -> int:
        """Value of ``f`` at ``point`` as a field code."""
        ...
