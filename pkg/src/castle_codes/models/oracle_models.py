"""Verification battery results."""

from typing import List

from pydantic import BaseModel, Field


class CheckResult(BaseModel):
    """One named cross-check."""

    name: str = Field(..., description="Check identifier")
    passed: bool = Field(..., description="Whether the check held")
    detail: str = Field("", description="Counts or the first counterexample")


class VerificationReport(BaseModel):
    """All checks run against one curve model."""

    model: str = Field(..., description="Curve label")
    checks: List[CheckResult] = Field(default_factory=list, description="Check results")

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, passed: bool, detail: str = "") -> None:
        self.checks.append(CheckResult(name=name, passed=passed, detail=detail))
