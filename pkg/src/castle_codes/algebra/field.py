"""Finite field arithmetic over GF(p^m).

An element is stored as an integer code: the polynomial ``c_0 + c_1 a + ... + c_{m-1} a^{m-1}``
is encoded as ``c_0 + c_1 p + ... + c_{m-1} p^{m-1}``, where ``a`` is a root of the Conway
polynomial of degree ``m`` over GF(p). This is the same integer representation ``galois`` uses,
so codes can be passed straight into ``galois.GF`` arrays.

Conway polynomials are primitive and mutually compatible, which fixes two things:
``a`` (code ``p`` when ``m > 1``) generates the multiplicative group, and for ``s | m`` the
subfield GF(p^s) sits inside GF(p^m) as the powers of ``a^((p^m - 1)/(p^s - 1))``.
"""

import logging
from functools import lru_cache
from typing import Any

import galois
import numpy as np
from pydantic import BaseModel, ConfigDict, Field, PrivateAttr

from ..config import get_settings
from ..errors import FieldError, FieldMismatchError

logger = logging.getLogger(__name__)

# Addition tables are materialised up to this order; larger odd-characteristic fields add digitwise.
_ADD_TABLE_LIMIT = 256


class FieldSpec(BaseModel):
    """GF(p^m) under a fixed defining polynomial, with log/antilog tables.

    Instances are immutable and cached by :func:`make_field`; arithmetic methods work on
    integer codes, :class:`FieldElement` wraps them for operator syntax.
    """

    model_config = ConfigDict(frozen=True)

    p: int = Field(..., ge=2, description="Prime characteristic")
    m: int = Field(..., ge=1, description="Extension degree")
    irreducible: tuple[int, ...] = Field(
        ..., description="Monic defining polynomial, constant coefficient first"
    )

    _exp: list[int] = PrivateAttr(default_factory=list)
    _log: list[int] = PrivateAttr(default_factory=list)
    _neg: list[int] = PrivateAttr(default_factory=list)
    _add_table: list[list[int]] | None = PrivateAttr(default=None)
    _galois: Any = PrivateAttr(default=None)

    def model_post_init(self, __context: Any) -> None:
        if len(self.irreducible) != self.m + 1 or self.irreducible[-1] != 1:
            raise FieldError(f"defining polynomial must be monic of degree {self.m}")
        if any(not 0 <= c < self.p for c in self.irreducible):
            raise FieldError(f"coefficients must lie in 0..{self.p - 1}")
        if 1 < self.m <= 4 and any(self._poly_at(c) == 0 for c in range(self.p)):
            raise FieldError(f"defining polynomial has a root in gf({self.p})")
        self._build_tables()

    # -- construction -------------------------------------------------------------------

    def _poly_at(self, c: int) -> int:
        value = 0
        for coefficient in reversed(self.irreducible):
            value = (value * c + coefficient) % self.p
        return value

    def _times_generator(self, code: int) -> int:
        p, m = self.p, self.m
        if m == 1:
            return code * ((-self.irreducible[0]) % p) % p
        digits = self.to_digits(code)
        top = digits[-1]
        shifted = [0] + digits[:-1]
        # a^m = -(c_0 + c_1 a + ... + c_{m-1} a^{m-1})
        reduced = [(d - top * c) % p for d, c in zip(shifted, self.irreducible[:-1])]
        return self.from_digits(reduced)

    def _build_tables(self) -> None:
        q = self.q
        exp = [1]
        for _ in range(q - 2):
            exp.append(self._times_generator(exp[-1]))
        if len(set(exp)) != q - 1:
            raise FieldError(f"defining polynomial of {self.name} is not primitive")
        log = [0] * q
        for i, code in enumerate(exp):
            log[code] = i
        self._exp = exp
        self._log = log
        if self.p == 2:
            self._neg = list(range(q))
        else:
            self._neg = [
                self.from_digits([(-d) % self.p for d in self.to_digits(c)]) for c in range(q)
            ]
            if q <= _ADD_TABLE_LIMIT:
                self._add_table = [[self._add_digits(a, b) for b in range(q)] for a in range(q)]
        logger.info(f"Built {self.name} with defining polynomial {self.irreducible}")

    # -- identity ---------------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldSpec):
            return NotImplemented
        return (self.p, self.m) == (other.p, other.m)

    def __hash__(self) -> int:
        return hash((self.p, self.m))

    def __repr__(self) -> str:
        return f"FieldSpec({self.name})"

    @property
    def q(self) -> int:
        """Field cardinality p^m."""
        return self.p**self.m

    @property
    def name(self) -> str:
        return f"gf({self.p}^{self.m})"

    @property
    def generator(self) -> int:
        """Code of the primitive element used by the log tables."""
        return self._exp[1] if self.q > 2 else 1

    # -- encoding -----------------------------------------------------------------------

    def to_digits(self, code: int) -> list[int]:
        """Coefficients c_0..c_{m-1} of the polynomial encoded by ``code``."""
        digits = []
        for _ in range(self.m):
            code, digit = divmod(code, self.p)
            digits.append(digit)
        return digits

    def from_digits(self, digits: list[int]) -> int:
        code = 0
        for digit in reversed(digits):
            code = code * self.p + digit
        return code

    def element(self, code: int) -> "FieldElement":
        return FieldElement(self, code)

    def elements(self) -> list["FieldElement"]:
        return [FieldElement(self, c) for c in range(self.q)]

    def check_code(self, code: int) -> int:
        if not 0 <= code < self.q:
            raise FieldError(f"code {code} is not an element of {self.name}")
        return code

    # -- scalar arithmetic on codes -----------------------------------------------------------

    def _add_digits(self, a: int, b: int) -> int:
        p = self.p
        result, weight = 0, 1
        while a or b:
            a, da = divmod(a, p)
            b, db = divmod(b, p)
            result += ((da + db) % p) * weight
            weight *= p
        return result

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_digits(a, b)

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self._neg[b])

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        return self._exp[(self._log[a] + self._log[b]) % (self.q - 1)]

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"zero has no inverse in {self.name}")
        return self._exp[(-self._log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, exponent: int) -> int:
        if exponent == 0:
            return 1
        if a == 0:
            if exponent < 0:
                raise ZeroDivisionError(f"zero has no inverse in {self.name}")
            return 0
        return self._exp[(self._log[a] * exponent) % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete logarithm to the base of :attr:`generator`."""
        if a == 0:
            raise ZeroDivisionError("log of zero")
        return self._log[a]

    def exp(self, k: int) -> int:
        return self._exp[k % (self.q - 1)]

    def sum(self, codes: list[int]) -> int:
        total = 0
        for c in codes:
            total = self.add(total, c)
        return total

    def dot(self, u: list[int] | tuple[int, ...], v: list[int] | tuple[int, ...]) -> int:
        total = 0
        for a, b in zip(u, v):
            if a and b:
                total = self.add(total, self._exp[(self._log[a] + self._log[b]) % (self.q - 1)])
        return total

    # -- Galois group --------------------------------------------------------------------

    def frobenius(self, a: int, k: int = 1) -> int:
        """a^(p^k)."""
        return self.pow(a, self.p ** (k % self.m))

    def trace_code(self, a: int, s: int) -> int:
        """Relative trace to GF(p^s), as a code of this field."""
        self._check_subdegree(s)
        total = 0
        for i in range(self.m // s):
            total = self.add(total, self.frobenius(a, s * i))
        return total

    def norm_code(self, a: int, s: int) -> int:
        """Relative norm to GF(p^s), as a code of this field."""
        self._check_subdegree(s)
        exponent = (self.q - 1) // (self.p**s - 1)
        return self.pow(a, exponent)

    def to_subfield(self, a: int, s: int) -> int:
        """Re-encode an element of the subfield GF(p^s) in that field's own encoding."""
        self._check_subdegree(s)
        if a == 0:
            return 0
        sub = make_field(self.p, s)
        ratio = (self.q - 1) // (sub.q - 1)
        index, remainder = divmod(self._log[a], ratio)
        if remainder:
            raise FieldError(f"code {a} of {self.name} does not lie in {sub.name}")
        return sub.exp(index)

    def _check_subdegree(self, s: int) -> None:
        if s < 1 or self.m % s:
            raise FieldError(f"subdegree {s} does not divide {self.m}")

    # -- interop --------------------------------------------------------------------------

    def galois_field(self) -> Any:
        """The matching ``galois.GF`` class (same integer encoding)."""
        if self._galois is None:
            if self.m == 1:
                self._galois = galois.GF(self.p)
            else:
                poly = galois.Poly(list(reversed(self.irreducible)), field=galois.GF(self.p))
                self._galois = galois.GF(self.q, irreducible_poly=poly)
        return self._galois

    def to_galois(self, codes: Any) -> Any:
        return self.galois_field()(np.asarray(codes, dtype=np.int64))

    def pretty(self, code: int) -> str:
        """Render ``code`` as ``0``, ``1``, ``a`` or ``a^k`` (plain digits over a prime field)."""
        if self.m == 1 or code in (0, 1):
            return str(code)
        k = self._log[code]
        return "a" if k == 1 else f"a^{k}"


class FieldElement:
    """An element of a :class:`FieldSpec` with operator support."""

    __slots__ = ("field", "code")

    def __init__(self, field: FieldSpec, code: int):
        self.field = field
        self.code = field.check_code(int(code))

    def _other(self, other: object) -> int:
        if not isinstance(other, FieldElement):
            raise TypeError(f"unsupported operand {other!r}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field.name} and {other.field.name} do not match")
        return other.code

    def __add__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.add(self.code, self._other(other)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.sub(self.code, self._other(other)))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.mul(self.code, self._other(other)))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        return FieldElement(self.field, self.field.div(self.code, self._other(other)))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.code))

    def __pow__(self, exponent: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.code, exponent))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field == other.field and self.code == other.code

    def __hash__(self) -> int:
        return hash((self.field.p, self.field.m, self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __int__(self) -> int:
        return self.code

    def __repr__(self) -> str:
        return f"FieldElement({self.field.name}, {self.code})"

    def __str__(self) -> str:
        return str(self.code)


def prime_power_parts(q: int) -> tuple[int, int]:
    """Split a prime power q into (p, m)."""
    if q < 2 or not galois.is_prime_power(q):
        raise FieldError(f"{q} is not a prime power")
    primes, exponents = galois.factors(q)
    return int(primes[0]), int(exponents[0])


@lru_cache(maxsize=None)
def make_field(p: int, m: int = 1) -> FieldSpec:
    """Return GF(p^m) with its built-in Conway polynomial.

    Args:
        p: Prime characteristic
        m: Extension degree

    Returns:
        The cached field specification

    Raises:
        FieldError: p not prime, m < 1, order above the configured cap, or no
            Conway polynomial is known for (p, m)
    """
    if not galois.is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if m < 1:
        raise FieldError(f"extension degree {m} must be at least 1")
    cap = get_settings().max_field_order
    if p**m > cap:
        raise FieldError(f"gf({p}^{m}) exceeds the maximum supported order {cap}")
    try:
        conway = galois.conway_poly(p, m)
    except LookupError as exc:
        raise FieldError(f"unsupported field gf({p}^{m}): {exc}") from exc
    irreducible = tuple(int(c) for c in reversed(conway.coeffs))
    return FieldSpec(p=p, m=m, irreducible=irreducible)


def field_of_order(q: int) -> FieldSpec:
    p, m = prime_power_parts(q)
    return make_field(p, m)


def _same_field(*elements: FieldElement) -> FieldSpec:
    field = elements[0].field
    for e in elements[1:]:
        if e.field != field:
            raise FieldMismatchError(f"{field.name} and {e.field.name} do not match")
    return field


def add(a: FieldElement, b: FieldElement) -> FieldElement:
    return a + b


def sub(a: FieldElement, b: FieldElement) -> FieldElement:
    return a - b


def mul(a: FieldElement, b: FieldElement) -> FieldElement:
    return a * b


def div(a: FieldElement, b: FieldElement) -> FieldElement:
    return a / b


def neg(a: FieldElement) -> FieldElement:
    return -a


def inv(a: FieldElement) -> FieldElement:
    return a.inverse()


def power(a: FieldElement, exponent: int) -> FieldElement:
    return a**exponent


def frobenius_power(e: FieldElement, k: int) -> FieldElement:
    """e^(p^k)."""
    return FieldElement(e.field, e.field.frobenius(e.code, k))


def trace_to(e: FieldElement, subdegree: int) -> FieldElement:
    """Relative trace of ``e`` to GF(p^subdegree), as an element of that subfield."""
    field = _same_field(e)
    value = field.trace_code(e.code, subdegree)
    return FieldElement(make_field(field.p, subdegree), field.to_subfield(value, subdegree))


def norm_to(e: FieldElement, subdegree: int) -> FieldElement:
    """Relative norm of ``e`` to GF(p^subdegree), as an element of that subfield."""
    field = _same_field(e)
    value = field.norm_code(e.code, subdegree)
    return FieldElement(make_field(field.p, subdegree), field.to_subfield(value, subdegree))


__all__ = [
    "FieldSpec",
    "FieldElement",
    "make_field",
    "field_of_order",
    "prime_power_parts",
    "add",
    "sub",
    "mul",
    "div",
    "neg",
    "inv",
    "power",
    "frobenius_power",
    "trace_to",
    "norm_to",
]
