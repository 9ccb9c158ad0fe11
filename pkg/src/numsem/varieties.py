"""Arithmetic varieties: families closed under intersection and quotient.

The central object is the smallest such family containing a given
semigroup (all of its arithmetic extensions) or a finite collection of
semigroups.  Both are finite and are materialized as :class:`VarietySet`
values in canonical order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Iterator, NamedTuple, Sequence

from .core import NATURALS, NumericalSemigroup
from .errors import IsNaturals


@dataclass(frozen=True)
class VarietySet:
    """Finite, duplicate-free, canonically sorted family of semigroups."""

    members: tuple[NumericalSemigroup, ...]

    @classmethod
    def of(cls, items: Iterable[NumericalSemigroup]) -> "VarietySet":
        return cls(tuple(sorted(set(items))))

    def __iter__(self) -> Iterator[NumericalSemigroup]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, s: object) -> bool:
        return s in self.members

    def to_json_dict(self) -> dict:
        return {"members": [s.to_json_dict() for s in self.members]}

    def is_intersection_closed(self) -> bool:
        pool = set(self.members)
        return all(
            a.intersect(b) in pool
            for a, b in itertools.combinations_with_replacement(self.members, 2)
        )

    def is_quotient_closed(self, max_divisor: int) -> bool:
        pool = set(self.members)
        return all(
            s.quotient(d) in pool
            for s in self.members
            for d in range(1, max_divisor + 1)
        )


class ExtremalElements(NamedTuple):
    maximum: NumericalSemigroup
    minimum: NumericalSemigroup
    maximum_proper: NumericalSemigroup
    minimum_proper: NumericalSemigroup


def arithmetic_extensions(s: NumericalSemigroup) -> VarietySet:
    """The smallest arithmetic variety containing ``s``.

    Quotients by members are the full set, so the generating quotients
    are exactly those by gaps; closing that seed (plus the full set)
    under pairwise intersection reaches every finite intersection of
    quotients, which is the whole family.
    """
    members: set[NumericalSemigroup] = {NATURALS}
    members.update(s.quotient(d) for d in s.gaps)
    work = list(members)
    while work:
        a = work.pop()
        for b in list(members):
            c = a.intersect(b)
            if c not in members:
                members.add(c)
                work.append(c)
    return VarietySet.of(members)


def is_arithmetic_extension(s: NumericalSemigroup, t: NumericalSemigroup) -> bool:
    """True iff ``t`` is an intersection of quotients of ``s``.

    It suffices to intersect the quotients by every d <= F(s)+1 with
    d*t inside s (checked on t's minimal generators): quotients by
    larger d are the full set and cannot shrink the intersection.
    """
    if t == NATURALS:
        return True
    if not s.is_subset_of(t):
        return False
    divisors = [
        d
        for d in range(1, max(s.frobenius + 1, 1) + 1)
        if all(s.contains(d * g) for g in t.min_generators)
    ]
    meet = reduce(
        NumericalSemigroup.intersect, (s.quotient(d) for d in divisors), NATURALS
    )
    return meet == t


def smallest_variety(family: Sequence[NumericalSemigroup]) -> VarietySet:
    """Smallest arithmetic variety containing every member of ``family``.

    Streams the cartesian product of the per-member extension sets,
    folding each tuple into a single intersection, without ever
    materializing the full product.
    """
    if not family:
        raise ValueError("family must be nonempty")
    extension_sets = [arithmetic_extensions(s).members for s in family]
    members: set[NumericalSemigroup] = {NATURALS}
    for combo in itertools.product(*extension_sets):
        members.add(reduce(NumericalSemigroup.intersect, combo))
    return VarietySet.of(members)


def _max_by_inclusion(items: Sequence[NumericalSemigroup]) -> NumericalSemigroup:
    for t in items:
        if all(u.is_subset_of(t) for u in items):
            return t
    raise RuntimeError("family has no maximum under inclusion")


def _min_by_inclusion(items: Sequence[NumericalSemigroup]) -> NumericalSemigroup:
    for t in items:
        if all(t.is_subset_of(u) for u in items):
            return t
    raise RuntimeError("family has no minimum under inclusion")


def extremal_elements(s: NumericalSemigroup) -> ExtremalElements:
    """Inclusion-wise extremes of the extension family of ``s``.

    Returns (maximum, minimum, maximum besides the full set, minimum
    besides s itself); the last one equals s with its fundamental gaps
    filled in.
    """
    if s == NATURALS:
        raise IsNaturals("the full set has no proper extensions")
    family = arithmetic_extensions(s).members
    return ExtremalElements(
        maximum=_max_by_inclusion(family),
        minimum=_min_by_inclusion(family),
        maximum_proper=_max_by_inclusion([t for t in family if t != NATURALS]),
        minimum_proper=_min_by_inclusion([t for t in family if t != s]),
    )


def monoid_hull(
    variety: VarietySet, elements: Iterable[int]
) -> NumericalSemigroup:
    """Intersection of every member of ``variety`` containing ``elements``.

    The full set belongs to any variety and contains everything, so the
    hull always exists; over a finite family it is itself a numerical
    semigroup.
    """
    xs = sorted(set(elements))
    if xs and xs[0] < 0:
        raise ValueError("elements must be nonnegative")
    containing = [t for t in variety if all(t.contains(x) for x in xs)]
    if not containing:
        raise ValueError("no member contains the elements; the family lacks the full set")
    return reduce(NumericalSemigroup.intersect, containing)
