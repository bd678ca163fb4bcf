"""Order bounds for an arbitrary basis of GF(q)^n.

A direct implementation from the definitions: rho is read off basis coordinates, and
well-behaving pairs are found by comparing against every pair below them. It shares no code
with :mod:`castle_codes.codes.bounds` so the two can check each other.
"""

import logging
from collections.abc import Iterable
from functools import cached_property, lru_cache

from ..algebra.linalg import FieldMatrix, FieldVector
from ..errors import BoundError, DimensionError

logger = logging.getLogger(__name__)


class GenericBasisAnalysis:
    """Well-behaving pairs, Lambda_i and N_r for a full-rank basis b_1..b_n (1-based)."""

    def __init__(self, basis: FieldMatrix):
        if basis.rows != basis.cols:
            raise DimensionError(f"basis must be square, got {basis.rows}x{basis.cols}")
        self.basis = basis
        self.field = basis.field
        self.n = basis.rows
        self._inverse = basis.inverse()
        self._vectors = basis.row_vectors()

    def rho(self, v: FieldVector) -> int:
        """min{r : v in span(b_1..b_r)}; 0 for the zero vector."""
        coords = self._inverse.combine(v)
        return max((t + 1 for t, c in enumerate(coords) if c), default=0)

    @cached_property
    def product_rho(self) -> list[list[int]]:
        """rho(b_i * b_j) for all pairs, 0-based table."""
        table = [[0] * self.n for _ in range(self.n)]
        for i in range(self.n):
            for j in range(i, self.n):
                value = self.rho(self._vectors[i].star(self._vectors[j]))
                table[i][j] = table[j][i] = value
        return table

    def _check(self, i: int) -> None:
        if not 1 <= i <= self.n:
            raise BoundError(f"basis index {i} outside 1..{self.n}")

    def well_behaving(self, i: int, j: int) -> bool:
        """rho(b_r * b_s) < rho(b_i * b_j) for every (r, s) below (i, j)."""
        self._check(i)
        self._check(j)
        table = self.product_rho
        top = table[i - 1][j - 1]
        return all(
            table[r][s] < top
            for r in range(i)
            for s in range(j)
            if (r, s) != (i - 1, j - 1)
        )

    @cached_property
    def _wb(self) -> list[list[bool]]:
        return [
            [self.well_behaving(i, j) for j in range(1, self.n + 1)]
            for i in range(1, self.n + 1)
        ]

    def generic_lambda(self, i: int) -> set[int]:
        """Lambda_i = {j : (b_i, b_j) well-behaving}."""
        self._check(i)
        return {j for j in range(1, self.n + 1) if self._wb[i - 1][j - 1]}

    def generic_n(self, r: int) -> set[tuple[int, int]]:
        """N_r = {(i, j) well-behaving with rho(b_i * b_j) = r + 1}."""
        if not 0 <= r < self.n:
            raise BoundError(f"N index {r} outside 0..{self.n - 1}")
        table = self.product_rho
        return {
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(self.n)
            if table[i][j] == r + 1 and self._wb[i][j]
        }

    def lambda_sizes(self) -> list[int]:
        return [len(self.generic_lambda(i)) for i in range(1, self.n + 1)]

    def n_sizes(self) -> list[int]:
        return [len(self.generic_n(r)) for r in range(self.n)]

    def order_bound(self, k: int) -> int:
        """min #Lambda_r for r = 1..k; bounds d(C_k)."""
        self._check(k)
        return min(len(self.generic_lambda(r)) for r in range(1, k + 1))

    def dual_order_bound(self, k: int) -> int:
        """min #N_r for r = k..n-1; bounds d(C_k^perp)."""
        if not 0 <= k < self.n:
            raise BoundError(f"dual index {k} outside 0..{self.n - 1}")
        return min(len(self.generic_n(r)) for r in range(k, self.n))

    def subset_order_bound(self, indices: Iterable[int]) -> int:
        """min #Lambda_r over r in I; bounds d(span{b_i : i in I})."""
        chosen = sorted(set(indices))
        if not chosen:
            raise BoundError("index set must not be empty")
        for i in chosen:
            self._check(i)
        return min(len(self.generic_lambda(r)) for r in chosen)


BasisLike = FieldMatrix | GenericBasisAnalysis


@lru_cache(maxsize=32)
def analyze(basis: FieldMatrix) -> GenericBasisAnalysis:
    """Cached analysis of a basis, shared by the functions below."""
    logger.debug(f"Analysing a {basis.rows}x{basis.cols} basis over {basis.field.name}")
    return GenericBasisAnalysis(basis)


def _analysis(basis: BasisLike) -> GenericBasisAnalysis:
    if isinstance(basis, GenericBasisAnalysis):
        return basis
    return analyze(basis)


def rho(basis: BasisLike, v: FieldVector) -> int:
    return _analysis(basis).rho(v)


def well_behaving(basis: BasisLike, i: int, j: int) -> bool:
    return _analysis(basis).well_behaving(i, j)


def generic_lambda(basis: BasisLike, i: int) -> set[int]:
    return _analysis(basis).generic_lambda(i)


def generic_n(basis: BasisLike, r: int) -> set[tuple[int, int]]:
    return _analysis(basis).generic_n(r)


def generic_order_bound(basis: BasisLike, k: int) -> int:
    return _analysis(basis).order_bound(k)


def generic_dual_order_bound(basis: BasisLike, k: int) -> int:
    return _analysis(basis).dual_order_bound(k)


def subset_order_bound(basis: BasisLike, indices: Iterable[int]) -> int:
    return _analysis(basis).subset_order_bound(indices)


__all__ = [
    "GenericBasisAnalysis",
    "analyze",
    "rho",
    "well_behaving",
    "generic_lambda",
    "generic_n",
    "generic_order_bound",
    "generic_dual_order_bound",
    "subset_order_bound",
]
