"""Exception hierarchy.

Every domain error is a ``ValueError`` so callers that only care about bad input
can catch that.
"""


class CastleCodesError(ValueError):
    """Base class for all castle-codes errors."""


class FieldError(CastleCodesError):
    """Unsupported or invalid finite field parameters."""


class FieldMismatchError(FieldError):
    """Operands belong to different fields."""


class SemigroupError(CastleCodesError):
    """Invalid numerical semigroup input or query."""


class CurveError(CastleCodesError):
    """Curve model cannot satisfy the request."""


class DimensionError(CastleCodesError):
    """Vector or matrix shapes do not match."""


class BoundError(CastleCodesError):
    """Bound index out of range or data is not Castle."""


class OracleCapError(CastleCodesError):
    """Exhaustive sweep would exceed the configured cap."""


class FormatError(CastleCodesError):
    """Malformed matrix, word or descriptor text."""


class DecodingFailure(CastleCodesError):
    """Majority voting could not produce a verified codeword."""

    def __init__(self, stage: str, detail: str = ""):
        self.stage = stage
        self.detail = detail
        message = f"decoding failure: weight exceeds guarantee ({stage})"
        if detail:
            message = f"{message}: {detail}"
        super().__init__(message)


__all__ = [
    "CastleCodesError",
    "FieldError",
    "FieldMismatchError",
    "SemigroupError",
    "CurveError",
    "DimensionError",
    "BoundError",
    "OracleCapError",
    "FormatError",
    "DecodingFailure",
]
