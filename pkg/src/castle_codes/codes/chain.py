"""One-point codes C(X, D, mQ) on Castle curves.

The chain basis b_1..b_n comes from evaluating, at every rational point, the monomial with
pole order m_i for each m_i in the dimension set M = H minus (n + H). C(mQ) is spanned by the
b_i with m_i <= m.
"""

import logging
from collections.abc import Sequence
from functools import cached_property

from ..algebra.linalg import FieldMatrix, FieldVector, rank_of_rows
from ..algebra.semigroup import (
    NumericalSemigroup,
    is_symmetric,
    scaled_sumset,
    shifted_complement,
)
from ..curves.base_curve import BaseCurve
from ..errors import BoundError, CurveError, DimensionError, SemigroupError
from ..models.code_models import CodeParameters
from ..models.curve_models import CurveKind, MonomialFunction
from .bounds import BoundTable, build_bound_table, order_bound_for_m

logger = logging.getLogger(__name__)


def dimension_set_only(H: NumericalSemigroup, q: int, n: int) -> list[int]:
    """M = H minus (n + H) from Castle data alone.

    When #(H minus (qH* + H)) equals n the two sets must coincide; that is checked too.

    Raises:
        SemigroupError: H is not symmetric or n != q * v_2, or the cross-check fails
    """
    if not is_symmetric(H):
        raise SemigroupError(f"{H!r} is not symmetric")
    if n != q * H.multiplicity:
        raise SemigroupError(f"n={n} differs from q * v_2 = {q * H.multiplicity}")
    M = sorted(shifted_complement(H, n))
    cutoff = q * H.multiplicity + H.conductor
    sumset = scaled_sumset(H, q, cutoff)
    outside = [t for t in range(cutoff) if t in H and t not in sumset]
    if len(outside) == n and outside != M:
        raise SemigroupError("H minus (n + H) disagrees with H minus (qH* + H)")
    return M


def gonality(H: NumericalSemigroup, q: int, i: int) -> int:
    """Lower bound for the i-th gonality gamma_i of a curve over GF(q) with semigroup H.

    gamma_1 = 0; gamma_i = i - 1 + g once i > g; gamma_2 = v_2 and gamma_i = v_i for
    i >= g - v_2 + 2 when v_2 <= q + 1; i - 1 otherwise.
    """
    if i < 1:
        raise BoundError(f"gonality index {i} must be at least 1")
    g = H.genus
    if i == 1:
        return 0
    if i > g:
        return i - 1 + g
    v2 = H.multiplicity
    if v2 <= q + 1:
        if i == 2:
            return v2
        if i >= g - v2 + 2:
            return H.element_at(i)
    return i - 1


class OnePointCode:
    """C(X, D, mQ) as a slice of its chain.

    Attributes:
        chain: Owning chain
        m: Divisor degree as requested (gaps resolve to the same code as m - 1)
        rows: 0-based chain indices of the generator rows
        k: Dimension
        abundance: iota(m - n)
        generator: k x n generator matrix
    """

    def __init__(self, chain: "CodeChain", m: int):
        self.chain = chain
        self.m = m
        self.rows = [i for i, m_i in enumerate(chain.dimension_set) if m_i <= m]
        H = chain.semigroup
        self.k = H.iota(m) - H.iota(m - chain.n)
        self.abundance = H.iota(m - chain.n)
        if self.k != len(self.rows):
            raise DimensionError(f"dimension formula gives {self.k}, M gives {len(self.rows)}")
        self.generator = chain.basis_matrix.select_rows(self.rows)

    @property
    def n(self) -> int:
        return self.chain.n

    @property
    def effective_m(self) -> int:
        """Largest m_i <= m."""
        return self.chain.dimension_set[self.rows[-1]]

    def __repr__(self) -> str:
        return f"OnePointCode(m={self.m}, [{self.n}, {self.k}])"


class CodeChain:
    """Evaluated basis b_1..b_n of GF(q)^n ordered by pole order.

    Attributes:
        curve: Concrete Castle curve
        field: Field of definition
        n: Length
        genus: Genus of H(Q)
        dimension_set: M as an increasing tuple
        functions: phi_i with v(phi_i) = m_i
        basis: b_i = ev(phi_i)
        basis_matrix: The b_i as rows
    """

    def __init__(self, curve: BaseCurve):
        if not curve.is_concrete:
            raise CurveError(
                f"{curve.label} has no point model; use dimension_set_only for its bounds"
            )
        if curve.n < 2 * curve.genus:
            raise CurveError(f"n={curve.n} is below 2g={2 * curve.genus}")
        self.curve = curve
        self.field = curve.field
        self.semigroup = curve.semigroup
        self.n = curve.n
        self.genus = curve.genus
        self.dimension_set: tuple[int, ...] = tuple(
            dimension_set_only(curve.semigroup, curve.field.q, curve.n)
        )
        self.functions: list[MonomialFunction] = [
            curve.monomial_for_pole(m) for m in self.dimension_set
        ]
        self.basis: list[FieldVector] = [curve.evaluate_all(f) for f in self.functions]
        self.basis_matrix = FieldMatrix.from_vectors(self.basis, cols=self.n)
        rank = self.basis_matrix.rank()
        if rank != self.n:
            raise CurveError(f"evaluated basis of {curve.label} has rank {rank}, expected {self.n}")
        logger.info(f"Built code chain on {curve.label}: n={self.n}, g={self.genus}")

    def __repr__(self) -> str:
        return f"CodeChain({self.curve.label}, n={self.n})"

    @cached_property
    def bound_table(self) -> BoundTable:
        return build_bound_table(self.semigroup, self.dimension_set, self.n)

    @cached_property
    def isometry_vector(self) -> FieldVector:
        """x with C(mQ)^perp = x * C((n + 2g - 2 - m)Q), normalised to x_1 = 1.

        Solves (b_i * b_j) . x = 0 for all i + j <= n (1-based).

        Raises:
            CurveError: no solution with every coordinate non-zero
        """
        system = FieldMatrix.from_vectors(
            [
                self.basis[i].star(self.basis[j])
                for i in range(self.n)
                for j in range(i, self.n - i - 1)
            ],
            cols=self.n,
        )
        kernel = system.nullspace()
        if len(kernel) != 1:
            raise CurveError(f"isometry system has a {len(kernel)}-dimensional kernel")
        x = kernel[0]
        if x.weight() != self.n:
            raise CurveError(f"isometry kernel vector {x.entries} has zero coordinates")
        x = x.scale(self.field.inv(x[0]))
        for i in range(self.n):
            for j in range(self.n - i - 1):
                if self.basis[i].star(self.basis[j]).dot(x):
                    raise CurveError(f"isometry vector fails at pair ({i + 1}, {j + 1})")
        return x

    # -- codes --------------------------------------------------------------------------------

    def code_at(self, m: int) -> OnePointCode:
        """C(X, D, mQ) for 0 <= m <= n + 2g - 1."""
        top = self.n + 2 * self.genus - 1
        if not 0 <= m <= top:
            raise BoundError(f"m={m} outside 0..{top}")
        return OnePointCode(self, m)

    def code_of_dimension(self, k: int) -> OnePointCode:
        """C(m_k Q), the k-th code of the chain."""
        if not 1 <= k <= self.n:
            raise BoundError(f"dimension {k} outside 1..{self.n}")
        return OnePointCode(self, self.dimension_set[k - 1])

    def rank_dimension_set(self) -> list[int]:
        """M from the ranks of the evaluated spaces, scanning pole orders up to n + 2g - 1."""
        rows: list[tuple[int, ...]] = []
        found = []
        for m in range(self.n + 2 * self.genus):
            if m not in self.semigroup:
                continue
            row = self.curve.evaluate_all(self.curve.monomial_for_pole(m)).entries
            if rank_of_rows(self.field, [*rows, row], self.n) > len(rows):
                rows.append(row)
                found.append(m)
        return found

    def goppa_witness(self, m: int) -> FieldVector:
        """ev(prod_{i <= lam} (x - a_i)) in C(mQ) for m = lam * v_2, lam < q; weight n - m.

        x is the v_2-pole function and a_1, a_2, ... are the field codes 0, 1, ...
        """
        v2 = self.semigroup.multiplicity
        lam, rest = divmod(m, v2)
        if rest or not 0 <= lam < self.field.q:
            raise BoundError(f"m={m} is not lam * v_2 with 0 <= lam < {self.field.q}")
        f = self.curve.monomial_for_pole(v2)
        values = self.curve.evaluate_all(f)
        field = self.field
        word = [1] * self.n
        for a in range(lam):
            word = [field.mul(w, field.sub(v, a)) for w, v in zip(word, values)]
        return FieldVector(field, word)

    def dual_code(self, m: int) -> FieldMatrix:
        """Generator matrix of C(mQ)^perp as x * C((n + 2g - 2 - m)Q)."""
        code = self.code_at(m)
        other = self.n + 2 * self.genus - 2 - m
        x = self.isometry_vector
        if other < 0:
            return FieldMatrix.zeros(self.field, 0, self.n)
        rows = [self.basis[i].star(x) for i in self.code_at(other).rows]
        if len(rows) != self.n - code.k:
            raise DimensionError(f"dual has dimension {len(rows)}, expected {self.n - code.k}")
        return FieldMatrix.from_vectors(rows, cols=self.n)


def build_chain(curve: BaseCurve, verify: bool = False) -> CodeChain:
    """Evaluate the chain basis; with ``verify`` also compare M against the rank scan."""
    chain = CodeChain(curve)
    if verify:
        scanned = chain.rank_dimension_set()
        if tuple(scanned) != chain.dimension_set:
            raise CurveError(f"rank scan gives M={scanned}, closed form {chain.dimension_set}")
    return chain


def bound_table_for(curve: BaseCurve) -> BoundTable:
    """Bound table from semigroup data; works for semigroup-level models too."""
    M = dimension_set_only(curve.semigroup, curve.field.q, curve.n)
    return build_bound_table(curve.semigroup, M, curve.n)


def code_at(chain: CodeChain, m: int) -> OnePointCode:
    return chain.code_at(m)


def rank_dimension_set(chain: CodeChain) -> list[int]:
    return chain.rank_dimension_set()


def goppa_witness(chain: CodeChain, m: int) -> FieldVector:
    return chain.goppa_witness(m)


def dual_code(chain: CodeChain, m: int) -> FieldMatrix:
    return chain.dual_code(m)


def encode(code: OnePointCode, message: Sequence[int] | FieldVector) -> FieldVector:
    """Sum of z_i times the generator rows."""
    coefficients = list(message)
    if len(coefficients) != code.k:
        raise DimensionError(f"message of length {len(coefficients)} for dimension {code.k}")
    for z in coefficients:
        code.chain.field.check_code(z)
    return code.generator.combine(coefficients)


def decode_message(code: OnePointCode, codeword: Sequence[int] | FieldVector) -> FieldVector:
    """Coefficients z with encode(code, z) == codeword.

    Raises:
        DimensionError: wrong length, or the word is not in the code
    """
    word = FieldVector(code.chain.field, codeword)
    if len(word) != code.n:
        raise DimensionError(f"word of length {len(word)} for length {code.n}")
    z = code.generator.transpose().solve(word)
    if z is None:
        raise DimensionError("word is not a codeword")
    return z


def goppa_bound(code: OnePointCode) -> int:
    """max(n - m, 1)."""
    return max(code.n - code.m, 1)


def improved_goppa_bound(code: OnePointCode) -> int:
    """n - m + gamma_{a+1}, floored at 1."""
    gamma = gonality(code.chain.semigroup, code.chain.field.q, code.abundance + 1)
    return max(code.n - code.m + gamma, 1)


def _closed_form(code: OnePointCode, m: int) -> int | None:
    chain = code.chain
    n, q = chain.n, chain.field.q
    v2 = chain.semigroup.multiplicity
    if m == 0:
        return n
    r, rest = divmod(m, v2)
    if not rest and 1 <= r <= q - 1:
        return n - m
    if n - v2 <= m <= n:
        return v2
    if chain.curve.kind is CurveKind.HERMITIAN:
        qh = v2
        if m < n - qh * qh and m in chain.semigroup:
            return n - m
        a, b = divmod(n - m, qh)
        if 0 <= a < qh and 0 <= m < n:
            return a * qh + b if b <= a else (a + 1) * qh
    return None


def exact_distance_castle(code: OnePointCode) -> int | None:
    """Exact minimum distance when a closed form applies, else None."""
    value = _closed_form(code, code.m)
    if value is None and code.effective_m != code.m and code.m < code.n:
        value = _closed_form(code, code.effective_m)
    return value


def code_parameters(code: OnePointCode) -> CodeParameters:
    table = code.chain.bound_table
    return CodeParameters(
        n=code.n,
        m=code.m,
        k=code.k,
        abundance=code.abundance,
        goppa_bound=goppa_bound(code),
        improved_goppa_bound=improved_goppa_bound(code),
        order_bound=order_bound_for_m(table, code.m),
        exact_distance=exact_distance_castle(code),
        singleton_defect_bound=code.chain.genus,
    )


__all__ = [
    "CodeChain",
    "OnePointCode",
    "build_chain",
    "bound_table_for",
    "dimension_set_only",
    "gonality",
    "code_at",
    "rank_dimension_set",
    "goppa_witness",
    "dual_code",
    "encode",
    "decode_message",
    "goppa_bound",
    "improved_goppa_bound",
    "exact_distance_castle",
    "code_parameters",
]
