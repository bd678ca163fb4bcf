"""Tests for code chains and one-point codes."""

import pytest

from castle_codes.algebra.linalg import FieldVector
from castle_codes.algebra.semigroup import from_generators
from castle_codes.codes.chain import (
    CodeChain,
    build_chain,
    code_at,
    code_parameters,
    decode_message,
    dimension_set_only,
    dual_code,
    encode,
    exact_distance_castle,
    goppa_bound,
    goppa_witness,
    gonality,
    improved_goppa_bound,
    rank_dimension_set,
)
from castle_codes.curves import HermitianCurve, suzuki_semigroup_model
from castle_codes.errors import BoundError, CurveError, DimensionError, SemigroupError
from castle_codes.oracle.brute_force import brute_min_distance

HERMITIAN2_BASIS = [
    [1, 1, 1, 1, 1, 1, 1, 1],
    [0, 0, 1, 1, 2, 2, 3, 3],
    [0, 1, 2, 3, 2, 3, 2, 3],
    [0, 0, 1, 1, 3, 3, 2, 2],
    [0, 0, 2, 3, 3, 1, 1, 2],
    [0, 0, 1, 1, 1, 1, 1, 1],
    [0, 0, 2, 3, 1, 2, 3, 1],
    [0, 0, 2, 3, 2, 3, 2, 3],
]


class TestDimensionSet:
    """Test M = H minus (n + H)."""

    def test_hermitian(self, hermitian2_reference: dict) -> None:
        """Test the Hermitian dimension set over GF(4)."""
        assert dimension_set_only(from_generators([2, 3]), 4, 8) == list(hermitian2_reference["M"])

    def test_suzuki(self, suzuki2_reference: dict) -> None:
        """Test the Suzuki dimension set over GF(8)."""
        H = from_generators([8, 10, 12, 13])
        assert dimension_set_only(H, 8, 64) == list(suzuki2_reference["M"])

    def test_rejects_non_castle_data(self) -> None:
        """Test that non-symmetric semigroups and wrong lengths are refused."""
        with pytest.raises(SemigroupError, match="symmetric"):
            dimension_set_only(from_generators([3, 4, 5]), 4, 12)
        with pytest.raises(SemigroupError, match="q \\* v_2"):
            dimension_set_only(from_generators([2, 3]), 4, 9)

    def test_rank_scan_agrees(self, hermitian2_chain: CodeChain) -> None:
        """Test that the rank scan of evaluated monomials finds the same set."""
        assert rank_dimension_set(hermitian2_chain) == list(hermitian2_chain.dimension_set)

    def test_norm_trace_rank_scan(self, norm_trace23_chain: CodeChain) -> None:
        """Test the rank scan on the norm-trace curve with q=2, r=3."""
        assert tuple(norm_trace23_chain.rank_dimension_set()) == norm_trace23_chain.dimension_set
        assert norm_trace23_chain.dimension_set[-1] == 49


class TestGonality:
    """Test the gonality lower bounds."""

    def test_hermitian(self) -> None:
        """Test gamma_i for <2, 3> over GF(4)."""
        H = from_generators([2, 3])
        assert [gonality(H, 4, i) for i in (1, 2, 3)] == [0, 2, 3]

    def test_suzuki(self) -> None:
        """Test gamma_i for the Suzuki semigroup over GF(8)."""
        H = from_generators([8, 10, 12, 13])
        assert gonality(H, 8, 1) == 0
        assert gonality(H, 8, 2) == 8
        assert [gonality(H, 8, i) for i in range(3, 8)] == [2, 3, 4, 5, 6]
        assert gonality(H, 8, 8) == H.element_at(8) == 20
        assert gonality(H, 8, 15) == 28

    def test_large_multiplicity(self) -> None:
        """Test that v_2 > q + 1 falls back to i - 1."""
        H = from_generators([8, 10, 12, 13])
        assert gonality(H, 2, 2) == 1

    def test_index_check(self) -> None:
        """Test that the index starts at 1."""
        with pytest.raises(BoundError):
            gonality(from_generators([2, 3]), 4, 0)


class TestCodeChain:
    """Test the evaluated basis of the Hermitian curve over GF(4)."""

    def test_basis(self, hermitian2_chain: CodeChain) -> None:
        """Test every basis vector."""
        assert [list(b) for b in hermitian2_chain.basis] == HERMITIAN2_BASIS
        assert hermitian2_chain.basis_matrix.rank() == 8

    def test_semigroup_model_is_refused(self) -> None:
        """Test that a chain needs points."""
        with pytest.raises(CurveError):
            CodeChain(suzuki_semigroup_model(2))

    def test_build_with_verification(self, hermitian2_chain: CodeChain) -> None:
        """Test building with the rank-scan cross-check enabled."""
        chain = build_chain(hermitian2_chain.curve, verify=True)
        assert chain.dimension_set == hermitian2_chain.dimension_set

    def test_isometry_vector(self, hermitian2_chain: CodeChain) -> None:
        """Test that x has full weight and is normalised."""
        x = hermitian2_chain.isometry_vector
        assert x[0] == 1
        assert x.weight() == 8

    @pytest.mark.parametrize("m", [0, 3, 5, 8])
    def test_dual_code(self, hermitian2_chain: CodeChain, m: int) -> None:
        """Test that x * C((n + 2g - 2 - m)Q) is orthogonal to C(mQ) with the right dimension."""
        code = code_at(hermitian2_chain, m)
        dual = dual_code(hermitian2_chain, m)
        assert dual.rows == 8 - code.k
        assert dual.rank() == dual.rows
        for c in code.generator.row_vectors():
            for d in dual.row_vectors():
                assert c.dot(d) == 0

    def test_dual_of_full_code(self, hermitian2_chain: CodeChain) -> None:
        """Test that the whole space has a zero dual."""
        assert hermitian2_chain.dual_code(9).rows == 0


class TestOnePointCode:
    """Test one-point codes on the Hermitian curve over GF(4)."""

    @pytest.mark.parametrize(
        "m,k,abundance", [(0, 1, 0), (1, 1, 0), (3, 3, 0), (7, 7, 0), (8, 7, 1), (9, 8, 1)]
    )
    def test_dimensions(self, hermitian2_chain: CodeChain, m: int, k: int, abundance: int) -> None:
        """Test k = iota(m) - iota(m - n) and the abundance."""
        code = hermitian2_chain.code_at(m)
        assert code.k == k
        assert code.abundance == abundance
        assert code.generator.rows == k

    def test_gap_resolves_downwards(self, hermitian2_chain: CodeChain) -> None:
        """Test that a gap gives the same code as the largest m_i below it."""
        code = hermitian2_chain.code_at(1)
        assert code.rows == [0]
        assert code.effective_m == 0
        assert exact_distance_castle(code) == 8

    def test_range_checks(self, hermitian2_chain: CodeChain) -> None:
        """Test the valid ranges of m and k."""
        with pytest.raises(BoundError):
            hermitian2_chain.code_at(10)
        with pytest.raises(BoundError):
            hermitian2_chain.code_at(-1)
        with pytest.raises(BoundError):
            hermitian2_chain.code_of_dimension(0)
        assert hermitian2_chain.code_of_dimension(3).m == 3

    def test_encode(self, hermitian2_chain: CodeChain) -> None:
        """Test encoding (1, 1, 1) into C(3Q)."""
        code = hermitian2_chain.code_at(3)
        codeword = encode(code, [1, 1, 1])
        assert list(codeword) == [1, 0, 2, 3, 1, 0, 0, 1]
        assert list(decode_message(code, codeword)) == [1, 1, 1]

    def test_encode_checks(self, hermitian2_chain: CodeChain) -> None:
        """Test message length and element checks."""
        code = hermitian2_chain.code_at(3)
        with pytest.raises(DimensionError):
            encode(code, [1, 1])
        with pytest.raises(ValueError):
            encode(code, [1, 1, 4])

    def test_decode_message_rejects_non_codewords(self, hermitian2_chain: CodeChain) -> None:
        """Test that words outside the code are refused."""
        code = hermitian2_chain.code_at(3)
        with pytest.raises(DimensionError, match="not a codeword"):
            decode_message(code, [0, 0, 2, 1, 1, 0, 0, 1])
        with pytest.raises(DimensionError):
            decode_message(code, [0, 0, 2])

    @pytest.mark.parametrize("m,weight", [(0, 8), (2, 6), (4, 4), (6, 2)])
    def test_goppa_witness(self, hermitian2_chain: CodeChain, m: int, weight: int) -> None:
        """Test that the witness lies in C(mQ) and has weight n - m."""
        word = goppa_witness(hermitian2_chain, m)
        assert word.weight() == weight
        decode_message(hermitian2_chain.code_at(m), word)

    def test_goppa_witness_range(self, hermitian2_chain: CodeChain) -> None:
        """Test that only lam * v_2 with lam < q qualifies."""
        with pytest.raises(BoundError):
            goppa_witness(hermitian2_chain, 3)
        with pytest.raises(BoundError):
            goppa_witness(hermitian2_chain, 8)

    @pytest.mark.parametrize(
        "m,distance", [(0, 8), (2, 6), (3, 5), (4, 4), (5, 3), (6, 2), (7, 2), (8, 2)]
    )
    def test_exact_distances(self, hermitian2_chain: CodeChain, m: int, distance: int) -> None:
        """Test the closed-form minimum distances."""
        assert exact_distance_castle(hermitian2_chain.code_at(m)) == distance

    def test_no_closed_form_for_abundant_code(self, hermitian2_chain: CodeChain) -> None:
        """Test that m = n + 1 has no closed form."""
        assert exact_distance_castle(hermitian2_chain.code_at(9)) is None

    def test_goppa_bounds(self, hermitian2_chain: CodeChain) -> None:
        """Test the plain and improved Goppa bounds."""
        assert goppa_bound(hermitian2_chain.code_at(5)) == 3
        assert goppa_bound(hermitian2_chain.code_at(9)) == 1
        assert improved_goppa_bound(hermitian2_chain.code_at(8)) == 2
        assert improved_goppa_bound(hermitian2_chain.code_at(9)) == 1

    def test_code_parameters(self, hermitian2_chain: CodeChain) -> None:
        """Test the parameter summary for C(5Q)."""
        params = code_parameters(hermitian2_chain.code_at(5))
        assert params.n == 8
        assert params.k == 5
        assert params.abundance == 0
        assert params.goppa_bound == 3
        assert params.improved_goppa_bound == 3
        assert params.order_bound == 3
        assert params.exact_distance == 3
        assert params.singleton_defect_bound == 1


def test_rational_line_codes_are_reed_solomon(line4_chain: CodeChain) -> None:
    """Test that C(mQ) on the line has k = m + 1 and d = n - m."""
    for m in range(4):
        code = line4_chain.code_at(m)
        assert code.k == m + 1
        assert exact_distance_castle(code) == 4 - m
    assert isinstance(line4_chain.isometry_vector, FieldVector)


@pytest.mark.parametrize("chain_fixture", ["hermitian2_chain", "line4_chain", "norm_trace23_chain"])
def test_singleton_defect_is_at_most_genus(
    chain_fixture: str, request: pytest.FixtureRequest
) -> None:
    """Test k + d <= n + 1 with defect at most g for every sweepable C(mQ), m < n."""
    chain: CodeChain = request.getfixturevalue(chain_fixture)
    swept = 0
    for m in range(chain.n):
        code = chain.code_at(m)
        if chain.field.q**code.k > 2**12:
            continue
        d = brute_min_distance(code.generator)
        assert code.k + d <= chain.n + 1
        assert chain.n + 1 - code.k - d <= chain.genus
        swept += 1
    assert swept >= 3


def test_hermitian_closed_forms_over_gf9() -> None:
    """Test closed-form distances on the Hermitian curve over GF(9) against exhaustive sweeps."""
    chain = build_chain(HermitianCurve(3))
    expected = {0: 27, 3: 24, 4: 23, 5: 23, 6: 21, 7: 20}
    for m, distance in expected.items():
        code = chain.code_at(m)
        assert exact_distance_castle(code) == distance
        assert brute_min_distance(code.generator) == distance
