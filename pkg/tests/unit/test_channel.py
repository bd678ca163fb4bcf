"""Tests for the seeded error channel."""

import pytest

from castle_codes.algebra.field import FieldSpec
from castle_codes.algebra.linalg import FieldVector
from castle_codes.codes.channel import make_rng, random_error, transmit
from castle_codes.errors import DimensionError


@pytest.mark.parametrize("weight", [0, 1, 3, 8])
def test_random_error_has_exact_weight(gf4: FieldSpec, weight: int) -> None:
    """Test that the error has exactly the requested weight."""
    error = random_error(gf4, 8, weight, make_rng(7))
    assert len(error) == 8
    assert error.weight() == weight


def test_same_seed_same_error(gf4: FieldSpec) -> None:
    """Test reproducibility from a seed."""
    first = random_error(gf4, 16, 4, make_rng(123))
    second = random_error(gf4, 16, 4, make_rng(123))
    assert first == second


def test_default_seed_is_reproducible(gf4: FieldSpec) -> None:
    """Test that no seed falls back to the configured default."""
    assert random_error(gf4, 16, 5, make_rng()) == random_error(gf4, 16, 5, make_rng())


def test_weight_out_of_range(gf4: FieldSpec) -> None:
    """Test that impossible weights are refused."""
    with pytest.raises(DimensionError):
        random_error(gf4, 4, 5, make_rng(0))
    with pytest.raises(DimensionError):
        random_error(gf4, 4, -1, make_rng(0))


def test_transmit(gf4: FieldSpec) -> None:
    """Test that received minus error is the codeword."""
    codeword = FieldVector(gf4, [1, 0, 2, 3, 1, 0, 0, 1])
    received, error = transmit(codeword, 2, make_rng(5))
    assert error.weight() == 2
    assert received - error == codeword
