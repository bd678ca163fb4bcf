"""Models package initialization."""

from .code_models import (
    DESCRIPTOR_FORMAT,
    CodeDescriptor,
    CodeParameters,
    GoppaDominanceEntry,
    ImprovedCodeEntry,
)
from .curve_models import CurveKind, CurveSpec, CurveSummary, MonomialFunction
from .decoder_models import CandidateVote, DecodeResult, VotingStep
from .oracle_models import CheckResult, VerificationReport

__all__ = [
    # Curve models
    "CurveKind",
    "CurveSpec",
    "CurveSummary",
    "MonomialFunction",
    # Code models
    "DESCRIPTOR_FORMAT",
    "CodeDescriptor",
    "CodeParameters",
    "GoppaDominanceEntry",
    "ImprovedCodeEntry",
    # Decoder models
    "CandidateVote",
    "DecodeResult",
    "VotingStep",
    # Oracle models
    "CheckResult",
    "VerificationReport",
]
