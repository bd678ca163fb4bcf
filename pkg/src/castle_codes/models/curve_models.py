"""Curve-related models."""

from enum import Enum
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field


class CurveKind(str, Enum):
    """Supported pointed-curve families."""

    RATIONAL_LINE = "rational_line"
    HERMITIAN = "hermitian"
    NORM_TRACE = "norm_trace"
    SUZUKI = "suzuki"  # Semigroup level only
    GENERALIZED_HERMITIAN = "generalized_hermitian"  # Semigroup level only

    @property
    def is_concrete(self) -> bool:
        """Whether the family has enumerated points and an explicit function basis."""
        return self in (CurveKind.RATIONAL_LINE, CurveKind.HERMITIAN, CurveKind.NORM_TRACE)


class CurveSpec(BaseModel):
    """Parameters identifying one curve model."""

    kind: CurveKind = Field(..., description="Curve family")
    q: Optional[int] = Field(None, description="Base field size (Hermitian, NormTrace, line)")
    r: Optional[int] = Field(None, description="Extension degree r")
    q0: Optional[int] = Field(None, description="Suzuki parameter, q = 2*q0^2")


class MonomialFunction(BaseModel):
    """The function x^lam * y^mu with pole order lam*v(x) + mu*v(y) at Q."""

    model_config = ConfigDict(frozen=True)

    lam: int = Field(..., ge=0, description="Exponent of x")
    mu: int = Field(..., ge=0, description="Exponent of y")
    pole_order: int = Field(..., ge=0, description="Pole order at Q")

    def label(self) -> str:
        parts = []
        if self.lam:
            parts.append("x" if self.lam == 1 else f"x^{self.lam}")
        if self.mu:
            parts.append("y" if self.mu == 1 else f"y^{self.mu}")
        return "*".join(parts) or "1"


class CurveSummary(BaseModel):
    """Printable description of a curve model."""

    kind: CurveKind = Field(..., description="Curve family")
    field: str = Field(..., description="Field name, gf(p^m)")
    genus: int = Field(..., description="Genus of the Weierstrass semigroup")
    n: int = Field(..., description="Number of rational points other than Q")
    generators: List[int] = Field(..., description="Generators of H(Q)")
    castle: bool = Field(..., description="Symmetric H(Q) and n = q * v_2")
