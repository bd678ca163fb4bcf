"""Order bounds from the dimension set.

Everything here is set arithmetic on M = {m_1 < ... < m_n} and the Weierstrass semigroup H;
no curve evaluation is needed, so semigroup-level models get the same tables as concrete ones.
Indices follow the usual convention: ``i`` runs from 1 to n and ``s`` (for N*_s) from 0 to n-1.
"""

import logging
from collections.abc import Sequence
from functools import cached_property
from typing import TYPE_CHECKING

from ..algebra.linalg import FieldMatrix
from ..algebra.semigroup import NumericalSemigroup, is_symmetric, shifted_complement
from ..errors import BoundError
from ..models.code_models import GoppaDominanceEntry, ImprovedCodeEntry

if TYPE_CHECKING:
    from .chain import CodeChain

logger = logging.getLogger(__name__)


def _check_index(i: int, low: int, high: int, what: str) -> None:
    if not low <= i <= high:
        raise BoundError(f"{what} index {i} outside {low}..{high}")


def lambda_star_size(M: Sequence[int], i: int) -> int:
    """#Lambda*_i = #{j : m_i + m_j in M}."""
    _check_index(i, 1, len(M), "Lambda*")
    members = set(M)
    m_i = M[i - 1]
    return sum(1 for m_j in M if m_i + m_j in members)


def nstar_size(M: Sequence[int], s: int) -> int:
    """#N*_s, the number of ordered pairs (i, j) with m_i + m_j = m_{s+1}."""
    _check_index(s, 0, len(M) - 1, "N*")
    members = set(M)
    target = M[s]
    return sum(1 for m_i in M if m_i <= target and target - m_i in members)


def nstar_pairs(M: Sequence[int], s: int) -> list[tuple[int, int]]:
    """The pairs of N*_s as 1-based index tuples, sorted by the first index."""
    _check_index(s, 0, len(M) - 1, "N*")
    position = {m: i for i, m in enumerate(M, start=1)}
    target = M[s]
    return [
        (i, position[target - m_i])
        for i, m_i in enumerate(M, start=1)
        if m_i <= target and target - m_i in position
    ]


def _require_castle(H: NumericalSemigroup, M: Sequence[int]) -> None:
    n = len(M)
    if not is_symmetric(H) or n not in H or set(M) != shifted_complement(H, n):
        raise BoundError(f"M is not H minus (n + H) for a symmetric {H!r}")


def lambda_star_size_castle(H: NumericalSemigroup, M: Sequence[int], i: int) -> int:
    """n - i + 1 - #((m_i + gaps(H)) intersected with M)."""
    _require_castle(H, M)
    _check_index(i, 1, len(M), "Lambda*")
    members = set(M)
    m_i = M[i - 1]
    translate = {m_i + gap for gap in H.gaps}
    return len(M) - i + 1 - len(translate & members)


class BoundTable:
    """Lambda*/N* sizes and both order bounds for one dimension set.

    Attributes:
        semigroup: Weierstrass semigroup H
        dimension_set: M as an increasing tuple
        n: Code length, equal to len(M)
        genus: Genus of H
        lambda_sizes: #Lambda*_1 .. #Lambda*_n
        nstar_sizes: #N*_0 .. #N*_{n-1}
    """

    def __init__(self, semigroup: NumericalSemigroup, dimension_set: Sequence[int]):
        self.semigroup = semigroup
        self.dimension_set: tuple[int, ...] = tuple(dimension_set)
        self.n = len(self.dimension_set)
        self.genus = semigroup.genus
        M = self.dimension_set
        self.lambda_sizes: tuple[int, ...] = tuple(
            lambda_star_size(M, i) for i in range(1, self.n + 1)
        )
        self.nstar_sizes: tuple[int, ...] = tuple(nstar_size(M, s) for s in range(self.n))
        self._d_ord = _running_min(self.lambda_sizes)
        self._d_ord_dual = list(reversed(_running_min(list(reversed(self.nstar_sizes)))))
        logger.info(f"Bound table for {semigroup!r} with n={self.n} ready")

    @cached_property
    def pi(self) -> int:
        """Smallest element of H not in M."""
        members = set(self.dimension_set)
        t = 0
        while t not in self.semigroup or t in members:
            t += 1
        return t

    def d_ord(self, k: int) -> int:
        _check_index(k, 1, self.n, "d_ORD")
        return self._d_ord[k - 1]

    def d_ord_dual(self, k: int) -> int:
        _check_index(k, 0, self.n - 1, "dual d_ORD")
        return self._d_ord_dual[k]

    def dimension_of(self, m: int) -> int:
        """#{i : m_i <= m}, the dimension of C(mQ)."""
        return sum(1 for m_i in self.dimension_set if m_i <= m)

    def __repr__(self) -> str:
        return f"BoundTable({self.semigroup!r}, n={self.n})"


def _running_min(values: Sequence[int]) -> list[int]:
    out: list[int] = []
    for v in values:
        out.append(v if not out else min(out[-1], v))
    return out


def build_bound_table(H: NumericalSemigroup, M: Sequence[int], n: int) -> BoundTable:
    """Validate (H, M, n) and tabulate all Lambda*/N* sizes."""
    if len(M) != n:
        raise BoundError(f"dimension set has {len(M)} elements, expected {n}")
    if list(M) != sorted(set(M)) or any(m not in H for m in M):
        raise BoundError("dimension set must be increasing and inside H")
    return BoundTable(H, M)


def d_ord(table: BoundTable, k: int) -> int:
    return table.d_ord(k)


def d_ord_dual(table: BoundTable, k: int) -> int:
    return table.d_ord_dual(k)


def order_bound_for_m(table: BoundTable, m: int) -> int:
    """d_ORD of C(mQ); 0 when the code is zero."""
    k = table.dimension_of(m)
    return table.d_ord(k) if k else 0


def goppa_dominance_report(table: BoundTable) -> list[GoppaDominanceEntry]:
    """Compare d_ORD(i) with the Goppa value n - m_i at every index.

    Raises:
        BoundError: equality fails at an index where m_i < pi - l_g guarantees it
    """
    threshold = table.pi - table.semigroup.largest_gap
    entries = []
    for i, m_i in enumerate(table.dimension_set, start=1):
        order = table.d_ord(i)
        goppa = table.n - m_i
        guaranteed = m_i < threshold
        if guaranteed and order != goppa:
            raise BoundError(f"d_ORD({i}) = {order} differs from n - m_i = {goppa}")
        entries.append(
            GoppaDominanceEntry(
                index=i,
                m=m_i,
                order_bound=order,
                goppa_bound=goppa,
                improves=order > goppa,
                equality_guaranteed=guaranteed,
            )
        )
    return entries


def improved_support(table: BoundTable, delta: int) -> list[int]:
    """1-based indices i with #Lambda*_i >= delta."""
    _check_index(delta, 1, table.n, "designed distance")
    return [i for i, size in enumerate(table.lambda_sizes, start=1) if size >= delta]


def improved_dimension(table: BoundTable, delta: int) -> int:
    return len(improved_support(table, delta))


def one_point_dimension(table: BoundTable, delta: int) -> int:
    """Largest k with d_ORD(k) >= delta."""
    _check_index(delta, 1, table.n, "designed distance")
    return max((k for k in range(1, table.n + 1) if table.d_ord(k) >= delta), default=0)


def is_monotone(table: BoundTable, delta: int) -> bool:
    """Whether the selected indices form an initial segment 1..k."""
    support = improved_support(table, delta)
    return support == list(range(1, len(support) + 1))


def monotone_deltas(table: BoundTable) -> list[int]:
    """Non-trivial designed distances 2..n-1 whose improved code is a one-point code."""
    return [delta for delta in range(2, table.n) if is_monotone(table, delta)]


def improved_code_report(table: BoundTable) -> list[ImprovedCodeEntry]:
    return [
        ImprovedCodeEntry(
            delta=delta,
            improved_dimension=improved_dimension(table, delta),
            one_point_dimension=one_point_dimension(table, delta),
            monotone=is_monotone(table, delta),
        )
        for delta in range(1, table.n + 1)
    ]


def improved_code(chain: "CodeChain", delta: int) -> FieldMatrix:
    """Generator matrix with rows b_i for #Lambda*_i >= delta; minimum distance >= delta."""
    table = chain.bound_table
    support = improved_support(table, delta)
    if not is_monotone(table, delta):
        logger.warning(
            f"Improved code for delta={delta} is not a one-point code; "
            f"it depends on the chosen monomial basis"
        )
    return chain.basis_matrix.select_rows([i - 1 for i in support])


__all__ = [
    "BoundTable",
    "build_bound_table",
    "lambda_star_size",
    "lambda_star_size_castle",
    "nstar_size",
    "nstar_pairs",
    "d_ord",
    "d_ord_dual",
    "order_bound_for_m",
    "goppa_dominance_report",
    "improved_support",
    "improved_dimension",
    "one_point_dimension",
    "is_monotone",
    "monotone_deltas",
    "improved_code_report",
    "improved_code",
]
