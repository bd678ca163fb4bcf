"""Decoder results and vote logs."""

from typing import List, Tuple

from pydantic import BaseModel, Field


class CandidateVote(BaseModel):
    """One candidate position of the syndrome matrix and its vote."""

    i: int = Field(..., description="Row index (1-based)")
    j: int = Field(..., description="Column index (1-based)")
    predicted: int = Field(..., description="Rank-preserving entry s'_ij (field code)")
    vote: int = Field(..., description="Implied value of the next syndrome (field code)")


class VotingStep(BaseModel):
    """Majority vote for syndrome s_{l+1}."""

    frontier: int = Field(..., description="l, the number of syndromes known before this step")
    pairs: List[Tuple[int, int]] = Field(..., description="N*_l, the positions voted on")
    candidates: List[CandidateVote] = Field(default_factory=list, description="Candidate votes")
    winner: int = Field(..., description="Value assigned to s_{l+1}")
    winner_count: int = Field(..., description="Number of votes for the winner")


class DecodeResult(BaseModel):
    """Outcome of a successful decode."""

    codeword: List[int] = Field(..., description="Recovered codeword c = u - e")
    error: List[int] = Field(..., description="Error vector e")
    message: List[int] = Field(..., description="Coefficients of c in the generator rows")
    syndromes: List[int] = Field(..., description="All n syndromes s_i = h_i . e")
    steps: List[VotingStep] = Field(default_factory=list, description="Vote log")

    @property
    def error_weight(self) -> int:
        return sum(1 for a in self.error if a)
