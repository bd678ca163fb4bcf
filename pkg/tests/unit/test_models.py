"""Tests for pydantic models."""

import pytest
from pydantic import ValidationError

from castle_codes.models import (
    CandidateVote,
    CheckResult,
    CodeDescriptor,
    CurveKind,
    CurveSpec,
    DecodeResult,
    MonomialFunction,
    VerificationReport,
    VotingStep,
)


def test_curve_kind_concreteness() -> None:
    """Test which families have points."""
    assert CurveKind.HERMITIAN.is_concrete
    assert CurveKind.NORM_TRACE.is_concrete
    assert CurveKind.RATIONAL_LINE.is_concrete
    assert not CurveKind.SUZUKI.is_concrete
    assert not CurveKind.GENERALIZED_HERMITIAN.is_concrete
    assert CurveKind("suzuki") is CurveKind.SUZUKI


def test_monomial_label() -> None:
    """Test rendering monomials."""
    assert MonomialFunction(lam=0, mu=0, pole_order=0).label() == "1"
    assert MonomialFunction(lam=3, mu=1, pole_order=9).label() == "x^3*y"
    assert MonomialFunction(lam=0, mu=2, pole_order=6).label() == "y^2"
    with pytest.raises(ValidationError):
        MonomialFunction(lam=-1, mu=0, pole_order=0)


def test_monomial_is_frozen() -> None:
    """Test that monomials are immutable and hashable."""
    f = MonomialFunction(lam=1, mu=0, pole_order=2)
    with pytest.raises(ValidationError):
        f.lam = 2
    assert len({f, MonomialFunction(lam=1, mu=0, pole_order=2)}) == 1


def test_code_descriptor() -> None:
    """Test descriptor defaults and the curve spec it yields."""
    descriptor = CodeDescriptor(model=CurveKind.NORM_TRACE, q=2, r=3, m=11)
    assert descriptor.format == "castle-codes/1"
    assert descriptor.curve_spec() == CurveSpec(kind=CurveKind.NORM_TRACE, q=2, r=3)


def test_code_descriptor_rejects_both_choices() -> None:
    """Test that m and delta are mutually exclusive."""
    with pytest.raises(ValidationError):
        CodeDescriptor(model=CurveKind.HERMITIAN, q=2, m=3, delta=4)


def test_decode_result_weight() -> None:
    """Test the error weight property and the vote log."""
    step = VotingStep(
        frontier=5,
        pairs=[(3, 3)],
        candidates=[CandidateVote(i=3, j=3, predicted=3, vote=2)],
        winner=2,
        winner_count=1,
    )
    result = DecodeResult(
        codeword=[1, 0], error=[0, 2], message=[1], syndromes=[2, 0], steps=[step]
    )
    assert result.error_weight == 1
    assert result.steps[0].candidates[0].vote == 2


def test_verification_report() -> None:
    """Test that a report passes only when every check does."""
    report = VerificationReport(model="hermitian(q=2)")
    assert report.passed
    report.add("castle", True)
    assert report.passed
    report.add("lgm_bound", False, "lgm=10")
    assert not report.passed
    assert report.checks[1] == CheckResult(name="lgm_bound", passed=False, detail="lgm=10")
