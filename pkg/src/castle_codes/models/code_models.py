"""Code descriptors and bound reports."""

from typing import Optional

from pydantic import BaseModel, Field, model_validator

from .curve_models import CurveKind, CurveSpec

DESCRIPTOR_FORMAT = "castle-codes/1"


class CodeDescriptor(BaseModel):
    """Everything needed to rebuild a code: curve parameters plus m or delta."""

    format: str = Field(DESCRIPTOR_FORMAT, description="Descriptor format version tag")
    model: CurveKind = Field(..., description="Curve family")
    q: Optional[int] = Field(None, description="Base field size")
    r: Optional[int] = Field(None, description="NormTrace / generalized Hermitian degree")
    q0: Optional[int] = Field(None, description="Suzuki parameter")
    m: Optional[int] = Field(None, description="Divisor degree of the one-point code")
    delta: Optional[int] = Field(None, description="Designed distance of an improved code")

    @model_validator(mode="after")
    def _one_code_choice(self) -> "CodeDescriptor":
        if self.format != DESCRIPTOR_FORMAT:
            raise ValueError(f"unsupported descriptor format {self.format!r}")
        if self.m is not None and self.delta is not None:
            raise ValueError("give either m or delta, not both")
        return self

    def curve_spec(self) -> CurveSpec:
        return CurveSpec(kind=self.model, q=self.q, r=self.r, q0=self.q0)


class CodeParameters(BaseModel):
    """Dimension and distance information for one one-point code."""

    n: int = Field(..., description="Code length")
    m: int = Field(..., description="Divisor degree")
    k: int = Field(..., description="Dimension iota(m) - iota(m - n)")
    abundance: int = Field(..., description="iota(m - n)")
    goppa_bound: int = Field(..., description="max(n - m, 1)")
    improved_goppa_bound: int = Field(..., description="n - m + gamma_{a+1}, floored at 1")
    order_bound: int = Field(..., description="d_ORD(k)")
    exact_distance: Optional[int] = Field(None, description="Closed-form distance when known")
    singleton_defect_bound: int = Field(..., description="Genus g; n + 1 - k - d <= g")


class GoppaDominanceEntry(BaseModel):
    """Order bound against the Goppa bound at one index of the dimension set."""

    index: int = Field(..., description="Index i (1-based)")
    m: int = Field(..., description="m_i")
    order_bound: int = Field(..., description="d_ORD(i)")
    goppa_bound: int = Field(..., description="n - m_i (may be <= 0 for abundant codes)")
    improves: bool = Field(..., description="d_ORD(i) > n - m_i")
    equality_guaranteed: bool = Field(..., description="m_i < pi - l_g")


class ImprovedCodeEntry(BaseModel):
    """Improved code against the best one-point code with the same designed distance."""

    delta: int = Field(..., description="Designed distance")
    improved_dimension: int = Field(..., description="#{i : #Lambda*_i >= delta}")
    one_point_dimension: int = Field(..., description="max{k : d_ORD(k) >= delta}")
    monotone: bool = Field(..., description="Improved code equals a one-point code")
