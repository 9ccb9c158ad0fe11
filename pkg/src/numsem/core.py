"""Numerical semigroups as finite, immutable values.

A numerical semigroup is a subset of the nonnegative integers that
contains 0, is closed under addition and misses only finitely many
positive integers (its *gaps*).  The gap set determines the whole
object, so that is what an instance stores: a sorted tuple of gaps
plus a frozenset view for O(1) membership.  Everything else — the
Frobenius number (largest gap, -1 when there is none), multiplicity
(least positive member), genus (number of gaps), minimal generating
system and depth — is derived from it.

Instances are immutable and hashable, so they can be shared freely
between threads or tasks; every operation is a pure function returning
a new instance.  The total order used for sorting is lexicographic on
the minimal generating system, which makes ``sorted(...)`` output
canonical and byte-deterministic everywhere.
"""

from __future__ import annotations

import math
from functools import total_ordering
from typing import Iterable, NamedTuple

from .errors import GcdNotOne, NonPositiveDivisor, NotASemigroup, TooLarge

#: Default ceiling for the conductor accepted by the generator sieve.
DEFAULT_LIMIT = 10**6


class Invariants(NamedTuple):
    """The classical single-semigroup invariants."""

    frobenius: int
    multiplicity: int
    genus: int
    embedding_dimension: int


@total_ordering
class NumericalSemigroup:
    """A co-finite additive submonoid of the nonnegative integers."""

    __slots__ = ("_gaps", "_gapset", "_frobenius", "_msg")

    def __init__(self, gaps: Iterable[int] = ()) -> None:
        cleaned = sorted({int(g) for g in gaps})
        if cleaned and cleaned[0] < 1:
            raise NotASemigroup("gaps must be positive integers")
        self._gaps: tuple[int, ...] = tuple(cleaned)
        self._gapset: frozenset[int] = frozenset(cleaned)
        self._frobenius: int = cleaned[-1] if cleaned else -1
        self._msg: tuple[int, ...] | None = None
        for g in self._gaps:
            for a in range(1, g // 2 + 1):
                if a not in self._gapset and g - a not in self._gapset:
                    raise NotASemigroup(
                        f"{a} and {g - a} are members but their sum {g} is a gap"
                    )

    # -- constructors -------------------------------------------------

    @classmethod
    def from_gaps(cls, gaps: Iterable[int]) -> "NumericalSemigroup":
        """Build from an explicit gap set, validating additive closure."""
        return cls(gaps)

    @classmethod
    def from_generators(
        cls, generators: Iterable[int], limit: int = DEFAULT_LIMIT
    ) -> "NumericalSemigroup":
        """Smallest numerical semigroup containing the given generators.

        Membership is sieved upward until a run of multiplicity-many
        consecutive members appears; from that point on everything is a
        member, so the gap set below it is exact.  Construction is
        rejected with :class:`TooLarge` once the sieve passes ``limit``.
        """
        gens = sorted({int(g) for g in generators})
        if not gens:
            raise ValueError("at least one generator is required")
        if gens[0] < 1:
            raise ValueError("generators must be positive integers")
        if math.gcd(*gens) != 1:
            raise GcdNotOne(
                f"gcd of {gens} is {math.gcd(*gens)}; the complement would be infinite"
            )
        if gens[0] == 1:
            return cls()
        m = gens[0]
        table = bytearray(2 * gens[-1] + 2)
        table[0] = 1
        run, x = 0, 1
        while run < m:
            if x > limit:
                raise TooLarge(f"conductor of {gens} exceeds the limit {limit}")
            if x >= len(table):
                table.extend(bytearray(len(table)))
            hit = 0
            for g in gens:
                if g > x:
                    break
                if table[x - g]:
                    hit = 1
                    break
            table[x] = hit
            run = run + 1 if hit else 0
            x += 1
        # members are consecutive from x - m on; the gaps all lie below
        return cls(i for i in range(1, x - m) if not table[i])

    @classmethod
    def naturals(cls) -> "NumericalSemigroup":
        """The full set of nonnegative integers (empty gap set)."""
        return NATURALS

    # -- membership and invariants ------------------------------------

    def contains(self, x: int) -> bool:
        """True iff x is a member; negatives are never members."""
        if x < 0:
            return False
        if x > self._frobenius:
            return True
        return x not in self._gapset

    __contains__ = contains

    @property
    def gaps(self) -> tuple[int, ...]:
        return self._gaps

    @property
    def gap_set(self) -> frozenset[int]:
        return self._gapset

    @property
    def frobenius(self) -> int:
        return self._frobenius

    @property
    def conductor(self) -> int:
        """First point after which every integer is a member."""
        return self._frobenius + 1

    @property
    def genus(self) -> int:
        return len(self._gaps)

    @property
    def multiplicity(self) -> int:
        """Smallest nonzero member (1 for the full set)."""
        m = 1
        for g in self._gaps:
            if g != m:
                break
            m += 1
        return m

    @property
    def min_generators(self) -> tuple[int, ...]:
        """The unique minimal generating system, computed once and cached.

        Candidates run over the nonzero members up to frobenius +
        multiplicity: anything larger decomposes as m plus a member.
        """
        if self._msg is None:
            if not self._gaps:
                self._msg = (1,)
            else:
                bound = self._frobenius + self.multiplicity
                members = [x for x in range(1, bound + 1) if self.contains(x)]
                memberset = set(members)
                self._msg = tuple(
                    s
                    for s in members
                    if not any(s - a in memberset for a in members if 2 * a <= s)
                )
        return self._msg

    @property
    def embedding_dimension(self) -> int:
        return len(self.min_generators)

    @property
    def small_elements(self) -> tuple[int, ...]:
        """Members up to and including the conductor."""
        return tuple(x for x in range(self.conductor + 1) if self.contains(x))

    def invariants(self) -> Invariants:
        return Invariants(
            self._frobenius, self.multiplicity, self.genus, self.embedding_dimension
        )

    def depth(self) -> int:
        """ceil((frobenius + 1) / multiplicity); 0 exactly for the full set."""
        return -(-(self._frobenius + 1) // self.multiplicity)

    # -- binary operations --------------------------------------------

    def quotient(self, d: int) -> "NumericalSemigroup":
        """All x whose d-fold multiple is a member; equals the full set iff d is."""
        if d < 1:
            raise NonPositiveDivisor(f"divisor must be >= 1, got {d}")
        return NumericalSemigroup(
            x for x in range(1, self._frobenius + 1) if not self.contains(d * x)
        )

    def halve(self) -> "NumericalSemigroup":
        return self.quotient(2)

    def intersect(self, other: "NumericalSemigroup") -> "NumericalSemigroup":
        """Set intersection; the gap set is the union of both gap sets."""
        return NumericalSemigroup(self._gapset | other._gapset)

    __and__ = intersect

    def fundamental_gaps(self) -> tuple[int, ...]:
        """Gaps x whose every proper multiple 2x, 3x, ... is a member.

        Checking 2x and 3x suffices: every k >= 2 is 2i + 3j with
        i, j >= 0, so kx is a sum of members.
        """
        return tuple(
            x for x in self._gaps if self.contains(2 * x) and self.contains(3 * x)
        )

    def is_subset_of(self, other: "NumericalSemigroup") -> bool:
        """Inclusion as sets (note: unrelated to the sorting order)."""
        return other._gapset <= self._gapset

    # -- identity, ordering, rendering --------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, NumericalSemigroup):
            return NotImplemented
        return self._gaps == other._gaps

    def __hash__(self) -> int:
        return hash(self._gaps)

    def __lt__(self, other: "NumericalSemigroup") -> bool:
        # canonical order: lexicographic on the minimal generating system
        return self.min_generators < other.min_generators

    def __str__(self) -> str:
        return "<" + ",".join(map(str, self.min_generators)) + ">"

    def __repr__(self) -> str:
        return f"NumericalSemigroup(gaps={list(self._gaps)})"

    def to_json_dict(self) -> dict:
        return {
            "generators": list(self.min_generators),
            "gaps": list(self._gaps),
            "frobenius": self._frobenius,
            "genus": self.genus,
            "multiplicity": self.multiplicity,
            "depth": self.depth(),
        }


#: The full set of nonnegative integers.
NATURALS = NumericalSemigroup()


def proportionally_modular(a: int, b: int, c: int) -> NumericalSemigroup:
    """The semigroup {x : (a*x mod b) <= c*x}.

    Every x >= ceil((b-1)/c) satisfies the inequality outright, so the
    gap set is found by direct evaluation below that point.
    """
    if min(a, b, c) < 1:
        raise ValueError("all three parameters must be >= 1")
    bound = -(-(b - 1) // c)
    return NumericalSemigroup(x for x in range(1, bound) if (a * x) % b > c * x)
