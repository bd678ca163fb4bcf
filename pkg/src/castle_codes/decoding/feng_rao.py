"""Majority-voting decoding of one-point codes on Castle curves.

The primary code C_k is described through its dual: with h_i = x * b_i, the first n - k
vectors h_1..h_{n-k} span C_k^perp. Syndromes s_i = h_i . e for i > n - k are recovered one at
a time by voting over the pairs of N*_l, then e is the unique solution of H e = s.
Indices in this module are 1-based, as in the vote log.
"""

import logging
from collections import Counter
from collections.abc import Sequence

from ..algebra.linalg import FieldMatrix, FieldVector, rank_of_rows
from ..codes.bounds import nstar_pairs
from ..codes.chain import CodeChain, decode_message
from ..errors import CurveError, DecodingFailure, DimensionError
from ..models.decoder_models import CandidateVote, DecodeResult, VotingStep

logger = logging.getLogger(__name__)


def dual_basis(chain: CodeChain) -> tuple[list[FieldVector], FieldVector]:
    """h_1..h_n with h_i = x * b_i, and the isometry vector x.

    Raises:
        CurveError: b_i . h_j vanishes for some i + j = n + 1
    """
    x = chain.isometry_vector
    h = [b.star(x) for b in chain.basis]
    n = chain.n
    for i in range(1, n + 1):
        if not chain.basis[i - 1].dot(h[n - i]):
            raise CurveError(f"b_{i} . h_{n + 1 - i} is zero")
    return h, x


class DecoderContext:
    """Everything a decode needs that does not depend on the received word.

    Attributes:
        chain: Code chain
        k: Dimension of the primary code C_k
        code: C_k as a one-point code
        dual_basis: h_1..h_n
        isometry: x with h_i = x * b_i
        nstar_sets: N*_l for l = n - k .. n - 1
        delta: Designed distance min #N*_l over that range
    """

    def __init__(self, chain: CodeChain, k: int):
        self.chain = chain
        self.field = chain.field
        self.n = chain.n
        self.k = k
        self.code = chain.code_of_dimension(k)
        self.dual_basis, self.isometry = dual_basis(chain)
        self.h_matrix = FieldMatrix.from_vectors(self.dual_basis, cols=self.n)
        self.h_inverse = self.h_matrix.inverse()
        self._products: dict[tuple[int, int], tuple[int, ...]] = {}
        self.nstar_sets: dict[int, list[tuple[int, int]]] = {
            s: nstar_pairs(chain.dimension_set, s) for s in range(self.n - k, self.n)
        }
        sizes = [len(pairs) for pairs in self.nstar_sets.values()]
        self.delta = min(sizes) if sizes else 1
        logger.info(
            f"Decoder ready for [{self.n}, {k}] on {chain.curve.label}: "
            f"delta={self.delta}, corrects {self.radius}"
        )

    @property
    def radius(self) -> int:
        return (self.delta - 1) // 2

    def product_coordinates(self, i: int, j: int) -> tuple[int, ...]:
        """lambda with h_i * h_j = sum_t lambda_t h_t."""
        key = (min(i, j), max(i, j))
        cached = self._products.get(key)
        if cached is None:
            product = self.dual_basis[i - 1].star(self.dual_basis[j - 1])
            cached = self.h_inverse.combine(product).entries
            self._products[key] = cached
        return cached

    def product_rho(self, i: int, j: int) -> int:
        """Sorting index of h_i * h_j in the h basis."""
        coords = self.product_coordinates(i, j)
        return max((t + 1 for t, c in enumerate(coords) if c), default=0)

    def syndromes(self, word: FieldVector) -> list[int]:
        return [h.dot(word) for h in self.dual_basis[: self.n - self.k]]

    def __repr__(self) -> str:
        return f"DecoderContext(n={self.n}, k={self.k}, delta={self.delta})"


class SyndromeState:
    """Syndromes known so far for one received word.

    ``known`` holds s_1..s_l; the entry s_rt of S = H D(e) H^T is known once
    rho(h_r * h_t) <= l.
    """

    def __init__(self, ctx: DecoderContext, received: FieldVector):
        self.ctx = ctx
        self.received = received
        self.known: list[int] = ctx.syndromes(received)

    @property
    def frontier(self) -> int:
        return len(self.known)

    def entry(self, r: int, t: int) -> int | None:
        coords = self.ctx.product_coordinates(r, t)
        frontier = self.frontier
        if any(coords[frontier:]):
            return None
        return self.ctx.field.dot(coords[:frontier], self.known)

    def _block(self, i: int, j: int) -> list[list[int]] | None:
        """S(i, j) with the corner left at zero, or None if another entry is unknown."""
        block = []
        for r in range(1, i + 1):
            row = []
            for t in range(1, j + 1):
                if (r, t) == (i, j):
                    row.append(0)
                    continue
                value = self.entry(r, t)
                if value is None:
                    return None
                row.append(value)
            block.append(row)
        return block

    def is_candidate(self, i: int, j: int) -> bool:
        """rank S(i-1, j-1) = rank S(i-1, j) = rank S(i, j-1), all entries known."""
        block = self._block(i, j)
        if block is None:
            return False
        field = self.ctx.field
        corner = rank_of_rows(field, [row[: j - 1] for row in block[: i - 1]], j - 1)
        above = rank_of_rows(field, block[: i - 1], j)
        left = rank_of_rows(field, [row[: j - 1] for row in block], j - 1)
        return corner == above == left

    def predicted_entry(self, i: int, j: int) -> int:
        """The unique s'_ij keeping rank S(i, j) = rank S(i-1, j-1).

        Raises:
            DecodingFailure: (i, j) is not a candidate
        """
        if not self.is_candidate(i, j):
            raise DecodingFailure("prediction", f"({i}, {j}) is not a candidate")
        if i == 1 or j == 1:
            return 0
        block = self._block(i, j)
        assert block is not None
        field = self.ctx.field
        upper = FieldMatrix(field, [row[: j - 1] for row in block[: i - 1]], cols=j - 1)
        gamma = upper.transpose().solve(FieldVector(field, block[i - 1][: j - 1]))
        if gamma is None:
            raise DecodingFailure("prediction", f"row {i} is outside the span of rows above")
        return field.dot(gamma.entries, [row[j - 1] for row in block[: i - 1]])


def build_context(chain: CodeChain, k: int) -> DecoderContext:
    return DecoderContext(chain, k)


def designed_distance(ctx: DecoderContext) -> int:
    return ctx.delta


def product_coordinates(ctx: DecoderContext, i: int, j: int) -> tuple[int, ...]:
    return ctx.product_coordinates(i, j)


def predicted_entry(state: SyndromeState, i: int, j: int) -> int:
    return state.predicted_entry(i, j)


def _vote(state: SyndromeState) -> VotingStep:
    ctx = state.ctx
    field = ctx.field
    frontier = state.frontier
    pairs = ctx.nstar_sets[frontier]
    candidates = []
    for i, j in pairs:
        if not state.is_candidate(i, j):
            continue
        coords = ctx.product_coordinates(i, j)
        lead = coords[frontier]
        if not lead or any(coords[frontier + 1 :]):
            logger.warning(f"Pair ({i}, {j}) of N*_{frontier} is not well-behaving; skipped")
            continue
        predicted = state.predicted_entry(i, j)
        vote = field.div(field.sub(predicted, field.dot(coords[:frontier], state.known)), lead)
        candidates.append(CandidateVote(i=i, j=j, predicted=predicted, vote=vote))
    if not candidates:
        raise DecodingFailure("candidates", f"no candidate for s_{frontier + 1}")
    tally = Counter(c.vote for c in candidates).most_common()
    winner, count = tally[0]
    if len(tally) > 1 and tally[1][1] == count:
        logger.warning(f"Tie between votes {winner} and {tally[1][0]} for s_{frontier + 1}")
        raise DecodingFailure("vote", f"tie for s_{frontier + 1}")
    logger.debug(f"s_{frontier + 1} = {winner} with {count} of {len(candidates)} votes")
    state.known.append(winner)
    return VotingStep(
        frontier=frontier, pairs=pairs, candidates=candidates, winner=winner, winner_count=count
    )


def decode(ctx: DecoderContext, received: Sequence[int] | FieldVector) -> DecodeResult:
    """Recover codeword, error and message from a received word.

    Raises:
        DimensionError: wrong word length
        DecodingFailure: no candidates, a tied vote, or an error heavier than the radius
    """
    word = FieldVector(ctx.field, received)
    if len(word) != ctx.n:
        raise DimensionError(f"received word of length {len(word)} for length {ctx.n}")
    state = SyndromeState(ctx, word)
    steps = [_vote(state) for _ in range(ctx.k)]
    error = ctx.h_inverse.apply(FieldVector(ctx.field, state.known))
    if error.weight() > ctx.radius:
        raise DecodingFailure("verification", f"error weight {error.weight()} > {ctx.radius}")
    codeword = word - error
    try:
        message = decode_message(ctx.code, codeword)
    except DimensionError as exc:
        raise DecodingFailure("verification", "result is not a codeword") from exc
    logger.info(f"Decoded with {error.weight()} errors")
    return DecodeResult(
        codeword=list(codeword),
        error=list(error),
        message=list(message),
        syndromes=list(state.known),
        steps=steps,
    )


def syndrome_matrix_rank(ctx: DecoderContext, error: Sequence[int] | FieldVector) -> int:
    """Rank of the full S = H D(e) H^T; equals wt(e)."""
    e = FieldVector(ctx.field, error)
    rows = []
    for h_r in ctx.dual_basis:
        weighted = h_r.star(e)
        rows.append([weighted.dot(h_t) for h_t in ctx.dual_basis])
    return rank_of_rows(ctx.field, rows, ctx.n)


__all__ = [
    "DecoderContext",
    "SyndromeState",
    "build_context",
    "decode",
    "designed_distance",
    "dual_basis",
    "predicted_entry",
    "product_coordinates",
    "syndrome_matrix_rank",
]
