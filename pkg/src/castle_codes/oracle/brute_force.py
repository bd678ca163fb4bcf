"""Exhaustive codeword sweeps with galois field arrays.

Messages are enumerated in plain lexicographic order, ``sweep_chunk`` at a time, and
multiplied by the generator matrix as a ``galois.FieldArray``.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Optional

import numpy as np

from ..algebra.linalg import FieldMatrix
from ..config import get_settings
from ..errors import DimensionError, OracleCapError

logger = logging.getLogger(__name__)


def _independent_rows(G: FieldMatrix) -> FieldMatrix:
    rref, pivots = G.echelon()
    return rref.select_rows(range(len(pivots)))


def _check_cap(q: int, k: int, cap: Optional[int]) -> int:
    limit = get_settings().brute_force_cap if cap is None else cap
    words = q**k
    if words > limit:
        raise OracleCapError(f"{q}^{k} = {words} codewords exceed the cap {limit}")
    return words


def _chunk_weights(GF: Any, G: Any, q: int, k: int, start: int, stop: int) -> np.ndarray:
    index = np.arange(start, stop, dtype=np.int64)
    digits = (index[:, None] // (q ** np.arange(k, dtype=np.int64))[None, :]) % q
    words = GF(digits) @ G
    return np.count_nonzero(words.view(np.ndarray), axis=1)


def _sweep(G: FieldMatrix, cap: Optional[int], jobs: Optional[int], reduce: Any) -> list[Any]:
    settings = get_settings()
    basis = _independent_rows(G)
    field = G.field
    k = basis.rows
    words = _check_cap(field.q, k, cap)
    GF = field.galois_field()
    generator = field.to_galois(np.array(basis.data, dtype=np.int64).reshape(k, G.cols))
    chunk = settings.sweep_chunk
    ranges = [(start, min(start + chunk, words)) for start in range(0, words, chunk)]
    workers = settings.jobs if jobs is None else jobs

    def run(bounds: tuple[int, int]) -> Any:
        return reduce(_chunk_weights(GF, generator, field.q, k, *bounds))

    logger.debug(f"Sweeping {words} codewords of length {G.cols} in {len(ranges)} chunks")
    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(run, ranges))
    return [run(bounds) for bounds in ranges]


def brute_min_distance(
    G: FieldMatrix, cap: Optional[int] = None, jobs: Optional[int] = None
) -> int:
    """Minimum weight of a non-zero codeword of the row space of G.

    Raises:
        DimensionError: G spans the zero code
        OracleCapError: more than ``cap`` codewords
    """
    if _independent_rows(G).rows == 0:
        raise DimensionError("the zero code has no minimum distance")
    n = G.cols

    def smallest(weights: np.ndarray) -> int:
        nonzero = weights[weights > 0]
        return int(nonzero.min()) if nonzero.size else n + 1

    return min(_sweep(G, cap, jobs, smallest))


def brute_weight_distribution(
    G: FieldMatrix, cap: Optional[int] = None, jobs: Optional[int] = None
) -> dict[int, int]:
    """Number of codewords of each weight, including the zero word."""
    n = G.cols
    if _independent_rows(G).rows == 0:
        return {0: 1}
    total = np.zeros(n + 1, dtype=np.int64)
    for counts in _sweep(G, cap, jobs, lambda w: np.bincount(w, minlength=n + 1)):
        total += counts
    return {w: int(c) for w, c in enumerate(total) if c}


__all__ = ["brute_min_distance", "brute_weight_distribution"]
