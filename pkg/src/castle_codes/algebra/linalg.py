"""Dense vectors and matrices over a finite field.

Entries are integer field codes (see :mod:`castle_codes.algebra.field`). Elimination runs on
``galois.FieldArray`` views of the same codes (``row_reduce``, ``null_space``,
``np.linalg.matrix_rank``, ``np.linalg.inv``), so all results are exact. Matrices and vectors
are values: every operation returns a new object.
"""

import logging
from collections.abc import Iterable, Iterator, Sequence
from typing import Any

import numpy as np

from ..errors import DimensionError, FieldMismatchError, FormatError
from .field import FieldSpec, make_field

logger = logging.getLogger(__name__)


class FieldVector:
    """A vector of field codes."""

    __slots__ = ("field", "entries")

    def __init__(self, field: FieldSpec, entries: Iterable[int]):
        self.field = field
        self.entries: tuple[int, ...] = tuple(int(e) for e in entries)

    @classmethod
    def zeros(cls, field: FieldSpec, n: int) -> "FieldVector":
        return cls(field, [0] * n)

    @classmethod
    def ones(cls, field: FieldSpec, n: int) -> "FieldVector":
        return cls(field, [1] * n)

    def _check(self, other: "FieldVector") -> None:
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field.name} and {other.field.name} do not match")
        if len(other) != len(self):
            raise DimensionError(f"vector lengths {len(self)} and {len(other)} differ")

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[int]:
        return iter(self.entries)

    def __getitem__(self, i: int) -> int:
        return self.entries[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldVector):
            return NotImplemented
        return self.field == other.field and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"FieldVector({self.field.name}, {list(self.entries)})"

    def __add__(self, other: "FieldVector") -> "FieldVector":
        self._check(other)
        add = self.field.add
        return FieldVector(self.field, [add(a, b) for a, b in zip(self.entries, other.entries)])

    def __sub__(self, other: "FieldVector") -> "FieldVector":
        self._check(other)
        sub = self.field.sub
        return FieldVector(self.field, [sub(a, b) for a, b in zip(self.entries, other.entries)])

    def __neg__(self) -> "FieldVector":
        return FieldVector(self.field, [self.field.neg(a) for a in self.entries])

    def scale(self, c: int) -> "FieldVector":
        mul = self.field.mul
        return FieldVector(self.field, [mul(c, a) for a in self.entries])

    def star(self, other: "FieldVector") -> "FieldVector":
        """Coordinatewise product."""
        self._check(other)
        mul = self.field.mul
        return FieldVector(self.field, [mul(a, b) for a, b in zip(self.entries, other.entries)])

    def dot(self, other: "FieldVector") -> int:
        self._check(other)
        return self.field.dot(self.entries, other.entries)

    def weight(self) -> int:
        return sum(1 for a in self.entries if a)

    def is_zero(self) -> bool:
        return not any(self.entries)

    def support(self) -> list[int]:
        return [i for i, a in enumerate(self.entries) if a]

    def to_text(self) -> str:
        return " ".join(str(a) for a in self.entries)


class FieldMatrix:
    """A dense row-major matrix of field codes.

    Attributes:
        field: Field the entries belong to
        rows: Number of rows
        cols: Number of columns
    """

    __slots__ = ("field", "data", "rows", "cols")

    def __init__(self, field: FieldSpec, data: Iterable[Iterable[int]], cols: int | None = None):
        self.field = field
        self.data: tuple[tuple[int, ...], ...] = tuple(tuple(int(e) for e in r) for r in data)
        self.rows = len(self.data)
        if cols is None:
            if not self.data:
                raise DimensionError("an empty matrix needs an explicit column count")
            cols = len(self.data[0])
        self.cols = cols
        for r in self.data:
            if len(r) != cols:
                raise DimensionError(f"row of length {len(r)} in a matrix with {cols} columns")

    @classmethod
    def identity(cls, field: FieldSpec, n: int) -> "FieldMatrix":
        return cls(field, [[1 if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    @classmethod
    def zeros(cls, field: FieldSpec, rows: int, cols: int) -> "FieldMatrix":
        return cls(field, [[0] * cols for _ in range(rows)], cols=cols)

    @classmethod
    def from_vectors(cls, vectors: Sequence[FieldVector], cols: int | None = None) -> "FieldMatrix":
        if not vectors:
            raise DimensionError("cannot infer the field of an empty vector list")
        return cls(vectors[0].field, [v.entries for v in vectors], cols=cols)

    @classmethod
    def diagonal(cls, v: FieldVector) -> "FieldMatrix":
        n = len(v)
        return cls(v.field, [[v[i] if i == j else 0 for j in range(n)] for i in range(n)], cols=n)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldMatrix):
            return NotImplemented
        return (
            self.field == other.field
            and (self.rows, self.cols) == (other.rows, other.cols)
            and self.data == other.data
        )

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.data))

    def __repr__(self) -> str:
        return f"FieldMatrix({self.field.name}, {self.rows}x{self.cols})"

    def row(self, i: int) -> FieldVector:
        return FieldVector(self.field, self.data[i])

    def column(self, j: int) -> FieldVector:
        return FieldVector(self.field, [r[j] for r in self.data])

    def row_vectors(self) -> list[FieldVector]:
        return [FieldVector(self.field, r) for r in self.data]

    def transpose(self) -> "FieldMatrix":
        return FieldMatrix(
            self.field, [[r[j] for r in self.data] for j in range(self.cols)], cols=self.rows
        )

    def submatrix(self, rows: int, cols: int) -> "FieldMatrix":
        """Leading ``rows`` x ``cols`` block."""
        return FieldMatrix(self.field, [r[:cols] for r in self.data[:rows]], cols=cols)

    def select_rows(self, indices: Sequence[int]) -> "FieldMatrix":
        return FieldMatrix(self.field, [self.data[i] for i in indices], cols=self.cols)

    def __matmul__(self, other: "FieldMatrix") -> "FieldMatrix":
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field.name} and {other.field.name} do not match")
        if self.cols != other.rows:
            raise DimensionError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
            )
        columns = [other.column(j).entries for j in range(other.cols)]
        dot = self.field.dot
        return FieldMatrix(
            self.field, [[dot(r, c) for c in columns] for r in self.data], cols=other.cols
        )

    def apply(self, v: FieldVector) -> FieldVector:
        """Matrix times column vector."""
        if len(v) != self.cols:
            raise DimensionError(f"vector of length {len(v)} for {self.cols} columns")
        return FieldVector(self.field, [self.field.dot(r, v.entries) for r in self.data])

    def combine(self, coefficients: FieldVector | Sequence[int]) -> FieldVector:
        """Row vector times matrix: sum of coefficient_i * row_i."""
        coeffs = list(coefficients)
        if len(coeffs) != self.rows:
            raise DimensionError(f"{len(coeffs)} coefficients for {self.rows} rows")
        field = self.field
        total = [0] * self.cols
        for c, r in zip(coeffs, self.data):
            if c:
                total = [field.add(t, field.mul(c, a)) for t, a in zip(total, r)]
        return FieldVector(field, total)

    # -- elimination ------------------------------------------------------------------------

    def to_galois(self) -> Any:
        """The matrix as a ``galois.FieldArray`` of shape (rows, cols)."""
        codes = np.array(self.data, dtype=np.int64).reshape(self.rows, self.cols)
        return self.field.to_galois(codes)

    @classmethod
    def from_galois(cls, field: FieldSpec, array: Any, cols: int) -> "FieldMatrix":
        return cls(field, array.view(np.ndarray).tolist(), cols=cols)

    def is_empty(self) -> bool:
        return self.rows == 0 or self.cols == 0

    def echelon(self) -> tuple["FieldMatrix", list[int]]:
        """Reduced row echelon form and its pivot columns."""
        if self.is_empty():
            return self, []
        reduced = FieldMatrix.from_galois(self.field, self.to_galois().row_reduce(), self.cols)
        pivots = [next(c for c, a in enumerate(r) if a) for r in reduced.data if any(r)]
        return reduced, pivots

    def rref(self) -> "FieldMatrix":
        return self.echelon()[0]

    def rank(self) -> int:
        if self.is_empty():
            return 0
        return int(np.linalg.matrix_rank(self.to_galois()))

    def solve(self, b: FieldVector) -> FieldVector | None:
        """One solution x of A x = b (free variables zero), or None if inconsistent."""
        if len(b) != self.rows:
            raise DimensionError(f"right-hand side of length {len(b)} for {self.rows} rows")
        if self.rows == 0:
            return FieldVector.zeros(self.field, self.cols)
        augmented = FieldMatrix(
            self.field, [r + (b[i],) for i, r in enumerate(self.data)], cols=self.cols + 1
        )
        reduced, pivots = augmented.echelon()
        if pivots and pivots[-1] == self.cols:
            return None
        x = [0] * self.cols
        for r, c in enumerate(pivots):
            x[c] = reduced.data[r][self.cols]
        return FieldVector(self.field, x)

    def nullspace(self) -> list[FieldVector]:
        """The reduced echelon basis of {x : A x = 0}."""
        if self.cols == 0:
            return []
        if self.rows == 0:
            return FieldMatrix.identity(self.field, self.cols).row_vectors()
        kernel = self.to_galois().null_space()
        if kernel.shape[0] == 0:
            return []
        basis = FieldMatrix.from_galois(self.field, kernel, self.cols)
        return basis.rref().row_vectors()

    def inverse(self) -> "FieldMatrix":
        if self.rows != self.cols:
            raise DimensionError(f"cannot invert a {self.rows}x{self.cols} matrix")
        if self.rank() != self.rows:
            raise DimensionError("matrix is singular")
        return FieldMatrix.from_galois(self.field, np.linalg.inv(self.to_galois()), self.cols)

    # -- text format --------------------------------------------------------------------------

    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols} {self.field.name}"]
        lines.extend(" ".join(str(a) for a in r) for r in self.data)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "FieldMatrix":
        """Parse the ``rows cols gf(p^m)`` header format written by :meth:`to_text`."""
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
        if not lines:
            raise FormatError("empty matrix text")
        header = lines[0].split()
        if len(header) != 3:
            raise FormatError(f"bad matrix header {lines[0]!r}")
        try:
            rows, cols = int(header[0]), int(header[1])
            field = parse_field_name(header[2])
            data = [[int(tok) for tok in ln.split()] for ln in lines[1:]]
        except ValueError as exc:
            raise FormatError(f"bad matrix text: {exc}") from exc
        if len(data) != rows or any(len(r) != cols for r in data):
            raise FormatError(f"matrix body does not match header {rows}x{cols}")
        for r in data:
            for a in r:
                if not 0 <= a < field.q:
                    raise FormatError(f"entry {a} is not a code of {field.name}")
        return cls(field, data, cols=cols)


def parse_field_name(name: str) -> FieldSpec:
    """Parse ``gf(p^m)`` (or ``gf(p)``) into a field."""
    text = name.strip().lower()
    if not (text.startswith("gf(") and text.endswith(")")):
        raise FormatError(f"bad field name {name!r}")
    body = text[3:-1]
    try:
        if "^" in body:
            p, m = (int(part) for part in body.split("^"))
        else:
            p, m = int(body), 1
    except ValueError as exc:
        raise FormatError(f"bad field name {name!r}") from exc
    return make_field(p, m)


def rank_of_rows(field: FieldSpec, rows: Sequence[Sequence[int]], n_cols: int) -> int:
    return FieldMatrix(field, rows, cols=n_cols).rank()


def star(u: FieldVector, v: FieldVector) -> FieldVector:
    return u.star(v)


def inner(u: FieldVector, v: FieldVector) -> int:
    return u.dot(v)


def weight(v: FieldVector) -> int:
    return v.weight()


def hamming_distance(u: FieldVector, v: FieldVector) -> int:
    return (u - v).weight()


def rank(M: FieldMatrix) -> int:
    return M.rank()


def rref(M: FieldMatrix) -> FieldMatrix:
    return M.rref()


def solve(A: FieldMatrix, b: FieldVector) -> FieldVector | None:
    return A.solve(b)


def nullspace(A: FieldMatrix) -> list[FieldVector]:
    return A.nullspace()


__all__ = [
    "FieldVector",
    "FieldMatrix",
    "parse_field_name",
    "rank_of_rows",
    "star",
    "inner",
    "weight",
    "hamming_distance",
    "rank",
    "rref",
    "solve",
    "nullspace",
]
