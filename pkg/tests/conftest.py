"""Test configuration and fixtures."""

import pytest

from castle_codes.algebra.field import FieldSpec, make_field
from castle_codes.codes.bounds import BoundTable
from castle_codes.codes.chain import CodeChain, bound_table_for, build_chain
from castle_codes.config import get_settings
from castle_codes.curves import HermitianCurve, NormTraceCurve, RationalLine, suzuki_semigroup_model

# Hermitian curve over GF(4): the worked example used throughout the tests.
HERMITIAN2_POINTS = [(0, 0), (0, 1), (1, 2), (1, 3), (2, 2), (2, 3), (3, 2), (3, 3)]
HERMITIAN2_M = (0, 2, 3, 4, 5, 6, 7, 9)
HERMITIAN2_LAMBDA = (8, 6, 5, 4, 3, 2, 2, 1)
HERMITIAN2_NSTAR = (1, 2, 2, 3, 4, 5, 6, 8)

SUZUKI2_M = (
    0, 8, 10, 12, 13, 16, 18, 20, *range(21, 27), *range(28, 64),
    65, 66, 67, 68, 69, 70, 71, 73, 75, 78, 79, 81, 83, 91,
)  # fmt: skip
SUZUKI2_LAMBDA = (
    64, 56, 54, 52, 51, 48, 46, 44, 43, 42, 41, 40, 39, 38, 36, 35, 34, 33, 32, 31, 30,
    29, 28, 28, 26, 25, 24, 23, 22, 21, 20, 21, 18, 19, 16, 17, 16, 13, 12, 14, 10, 13,
    8, 12, 10, 9, 8, 8, 6, 8, 7, 4, 5, 4, 4, 4, 5, 4, 3, 2, 2, 2, 2, 1,
)  # fmt: skip


@pytest.fixture
def gf4() -> FieldSpec:
    """Provide GF(4) with a = 2 and a^2 = 3."""
    return make_field(2, 2)


@pytest.fixture
def gf9() -> FieldSpec:
    """Provide GF(9)."""
    return make_field(3, 2)


@pytest.fixture(scope="session")
def hermitian2() -> HermitianCurve:
    """Provide the Hermitian curve over GF(4)."""
    return HermitianCurve(2)


@pytest.fixture(scope="session")
def hermitian2_chain(hermitian2: HermitianCurve) -> CodeChain:
    """Provide the code chain of the Hermitian curve over GF(4)."""
    return build_chain(hermitian2)


@pytest.fixture(scope="session")
def norm_trace23_chain() -> CodeChain:
    """Provide the code chain of the norm-trace curve with q=2, r=3."""
    return build_chain(NormTraceCurve(2, 3))


@pytest.fixture(scope="session")
def line4_chain() -> CodeChain:
    """Provide the Reed-Solomon chain over GF(4)."""
    return build_chain(RationalLine(4))


@pytest.fixture(scope="session")
def suzuki2_table() -> BoundTable:
    """Provide the bound table of the Suzuki curve over GF(8)."""
    return bound_table_for(suzuki_semigroup_model(2))


@pytest.fixture
def golden_decode() -> dict:
    """Provide the worked decoding example for C(3Q) on the Hermitian curve over GF(4)."""
    return {
        "m": 3,
        "received": [0, 0, 2, 1, 1, 0, 0, 1],
        "error": [1, 0, 0, 2, 0, 0, 0, 0],
        "codeword": [1, 0, 2, 3, 1, 0, 0, 1],
        "message": [1, 1, 1],
        "syndromes": [3, 2, 1, 2, 1, 2, 1, 1],
    }


@pytest.fixture
def fresh_settings(monkeypatch: pytest.MonkeyPatch):
    """Clear cached settings before and after a test that sets environment variables."""
    get_settings.cache_clear()
    yield monkeypatch
    get_settings.cache_clear()


@pytest.fixture
def hermitian2_reference() -> dict:
    """Provide the dimension set and bound sequences of the Hermitian curve over GF(4)."""
    return {
        "points": HERMITIAN2_POINTS,
        "M": HERMITIAN2_M,
        "lambda": HERMITIAN2_LAMBDA,
        "nstar": HERMITIAN2_NSTAR,
    }


@pytest.fixture
def suzuki2_reference() -> dict:
    """Provide the dimension set and #Lambda* sequence of the Suzuki curve over GF(8)."""
    return {"M": SUZUKI2_M, "lambda": SUZUKI2_LAMBDA}
