"""Numerical semigroups.

A semigroup is held as a membership table up to ``conductor + max(generators)``; every integer
at or beyond the conductor is a member, so all queries are answered from the table.
"""

import logging
import operator
from functools import cached_property, reduce
from math import gcd

from pydantic import BaseModel, Field

from ..errors import SemigroupError

logger = logging.getLogger(__name__)


class LgmBound(BaseModel):
    """Point-count bounds for a curve with the given Weierstrass semigroup."""

    lgm: int = Field(..., description="#(S minus (qS*+S)) + 1")
    lewittes: int = Field(..., description="q * multiplicity + 1")
    q: int = Field(..., description="Field cardinality used")


class NumericalSemigroup:
    """Cofinite additive submonoid of the non-negative integers.

    Attributes:
        generators: Sorted, deduplicated generating set
        conductor: Least c such that every integer >= c is a member
        gaps: Sorted non-members
        genus: Number of gaps
        multiplicity: Smallest non-zero element v_2
    """

    def __init__(self, generators: list[int] | tuple[int, ...]):
        gens = sorted(set(int(a) for a in generators))
        if not gens:
            raise SemigroupError("at least one generator is required")
        if gens[0] <= 0:
            raise SemigroupError("generators must be positive")
        if reduce(gcd, gens) != 1:
            raise SemigroupError(f"gcd of {gens} is not 1: the semigroup has infinite genus")
        self.generators: tuple[int, ...] = tuple(gens)
        self._member = self._membership(gens)
        self.conductor = self._conductor()
        self.gaps: tuple[int, ...] = tuple(
            t for t in range(self.conductor) if not self._member[t]
        )
        self.genus = len(self.gaps)
        self.multiplicity = next(t for t in range(1, len(self._member)) if self._member[t])
        logger.debug(
            f"Semigroup {self.generators}: genus {self.genus}, conductor {self.conductor}"
        )

    @staticmethod
    def _membership(gens: list[int]) -> list[bool]:
        # Grow until a run of min(gens) consecutive members appears; past that run
        # everything is a member. Then pad by max(gens) for the documented table size.
        smallest, largest = gens[0], gens[-1]
        member = [True]
        run = 1
        while run < smallest:
            t = len(member)
            is_member = any(t >= a and member[t - a] for a in gens)
            member.append(is_member)
            run = run + 1 if is_member else 0
        conductor = len(member) - run
        member.extend([True] * (conductor + largest + 1 - len(member)))
        return member

    def _conductor(self) -> int:
        c = len(self._member)
        while c > 0 and self._member[c - 1]:
            c -= 1
        return c

    def __contains__(self, t: object) -> bool:
        try:
            value = operator.index(t)  # type: ignore[call-overload]
        except TypeError:
            return False
        if value < 0:
            return False
        return value >= self.conductor or self._member[value]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self.gaps == other.gaps

    def __hash__(self) -> int:
        return hash(self.gaps)

    def __repr__(self) -> str:
        gens = ",".join(str(a) for a in self.generators)
        return f"NumericalSemigroup<{gens}>"

    @cached_property
    def largest_gap(self) -> int:
        """l_g, taken as 0 for the trivial semigroup."""
        return self.gaps[-1] if self.gaps else 0

    def elements_up_to(self, bound: int) -> list[int]:
        """Members t with 0 <= t <= bound, increasing."""
        return [t for t in range(bound + 1) if t in self]

    def element_at(self, i: int) -> int:
        """v_i, the i-th smallest member (v_1 = 0)."""
        if i < 1:
            raise SemigroupError(f"element index {i} must be at least 1")
        below = self.conductor - self.genus
        if i <= below:
            return [t for t in range(self.conductor) if self._member[t]][i - 1]
        return self.conductor + (i - below - 1)

    def iota(self, m: int) -> int:
        """#{i : v_i <= m}, i.e. the dimension of L(mQ)."""
        if m < 0:
            return 0
        if m >= self.conductor:
            return m + 1 - self.genus
        return sum(1 for t in range(m + 1) if self._member[t])


def from_generators(gens: list[int] | tuple[int, ...]) -> NumericalSemigroup:
    """Build the semigroup generated by ``gens`` (gcd must be 1)."""
    return NumericalSemigroup(gens)


def is_symmetric(S: NumericalSemigroup) -> bool:
    """True iff the conductor equals twice the genus."""
    return S.conductor == 2 * S.genus


def genus_two_generators(a: int, b: int) -> int:
    """Genus (a-1)(b-1)/2 of the semigroup generated by coprime a < b."""
    if a <= 0 or b <= 0 or a >= b:
        raise SemigroupError(f"need 0 < a < b, got ({a}, {b})")
    if gcd(a, b) != 1:
        raise SemigroupError(f"{a} and {b} are not coprime")
    return (a - 1) * (b - 1) // 2


def shifted_complement(S: NumericalSemigroup, a: int) -> set[int]:
    """S minus (a + S); it has exactly ``a`` elements."""
    if a not in S:
        raise SemigroupError(f"{a} is not an element of {S!r}")
    return {t for t in range(a + S.conductor) if t in S and (t - a) not in S}


def scaled_sumset(S: NumericalSemigroup, q: int, cutoff: int | None = None) -> set[int]:
    """{q*h + h' : h in S non-zero, h' in S}, restricted to values below ``cutoff``.

    Every integer >= q*v_2 + conductor belongs to the set, so the default cutoff
    ``max(conductor*(q+1), q*v_2 + conductor)`` already pins down its complement.
    """
    if q < 2:
        raise SemigroupError(f"field size {q} must be at least 2")
    if cutoff is None:
        cutoff = max(S.conductor * (q + 1), q * S.multiplicity + S.conductor)
    members = S.elements_up_to(cutoff)
    result: set[int] = set()
    for h in members[1:]:
        base = q * h
        if base >= cutoff:
            break
        for h2 in members:
            if base + h2 >= cutoff:
                break
            result.add(base + h2)
    return result


def lgm_bound(S: NumericalSemigroup, q: int) -> LgmBound:
    """Geil-Matsumoto and Lewittes bounds on the number of rational points."""
    cutoff = q * S.multiplicity + S.conductor
    sumset = scaled_sumset(S, q, cutoff)
    outside = sum(1 for t in range(cutoff) if t in S and t not in sumset)
    return LgmBound(lgm=outside + 1, lewittes=q * S.multiplicity + 1, q=q)


def apery_set(S: NumericalSemigroup) -> set[int]:
    """{a in S* : a - v_2 not in S*}; one smallest member per residue class mod v_2."""
    v2 = S.multiplicity
    result = set()
    t = 1
    while len(result) < v2:
        if t in S and (t - v2 == 0 or (t - v2) not in S):
            result.add(t)
        t += 1
    return result


def element_at(S: NumericalSemigroup, i: int) -> int:
    return S.element_at(i)


def iota(S: NumericalSemigroup, m: int) -> int:
    return S.iota(m)


__all__ = [
    "NumericalSemigroup",
    "LgmBound",
    "from_generators",
    "is_symmetric",
    "genus_two_generators",
    "shifted_complement",
    "scaled_sumset",
    "lgm_bound",
    "apery_set",
    "element_at",
    "iota",
]
