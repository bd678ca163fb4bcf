"""Seeded error channel.

Randomness comes from numpy's ``default_rng`` (PCG64 seeded through SeedSequence), so a seed
reproduces the same error patterns on every platform.
"""

import logging
from typing import Optional

import numpy as np

from ..algebra.field import FieldSpec
from ..algebra.linalg import FieldVector
from ..config import get_settings
from ..errors import DimensionError

logger = logging.getLogger(__name__)


def make_rng(seed: Optional[int] = None) -> np.random.Generator:
    if seed is None:
        seed = get_settings().default_seed
    return np.random.default_rng(seed)


def random_error(field: FieldSpec, n: int, weight: int, rng: np.random.Generator) -> FieldVector:
    """Exactly ``weight`` non-zero coordinates at uniform positions with uniform non-zero values."""
    if not 0 <= weight <= n:
        raise DimensionError(f"error weight {weight} outside 0..{n}")
    entries = [0] * n
    if weight:
        positions = rng.choice(n, size=weight, replace=False)
        values = rng.integers(1, field.q, size=weight)
        for position, value in zip(positions, values):
            entries[int(position)] = int(value)
    return FieldVector(field, entries)


def transmit(
    codeword: FieldVector, weight: int, rng: np.random.Generator
) -> tuple[FieldVector, FieldVector]:
    """Add a random error of the given weight; returns (received, error)."""
    error = random_error(codeword.field, len(codeword), weight, rng)
    logger.debug(f"Channel error at positions {error.support()}")
    return codeword + error, error


__all__ = ["make_rng", "random_error", "transmit"]
