"""Doubling machinery: the semigroups T whose half-quotient is a given S.

Every such T is encoded by a pair (m, H) where m is an odd member of S
and H is an "upper m-set" of gaps — a subset satisfying three closure
conditions — via

    T = {2s : s in S} ∪ {2s + m : s in S} ∪ {2h + m : h in H}.

Distinct pairs encode distinct semigroups, its Frobenius number has a
closed form, and the pairs whose semigroup stays under a Frobenius
bound can be enumerated exactly.  The empty H is vacuously valid and
is what produces e.g. <3,4> over <2,3>; the listing function
:func:`upper_m_sets` nevertheless reports nonempty sets only, which is
the conventional reading of the definition.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .core import NumericalSemigroup
from .errors import BadM, InvalidCertificate, NotGapSubset, SemigroupError


@dataclass(frozen=True)
class DoubleLabel:
    """The (m, H) pair naming one element of the doubles of a semigroup."""

    m: int
    upper_set: frozenset[int]

    def to_json_dict(self) -> dict:
        return {"m": self.m, "H": sorted(self.upper_set)}

    def __str__(self) -> str:
        return f"S({self.m}; {','.join(map(str, sorted(self.upper_set)))})"


def _check_modulus(s: NumericalSemigroup, m: int) -> None:
    if m % 2 == 0 or not s.contains(m):
        raise BadM(f"modulus must be an odd member of {s}, got {m}")


def is_upper_m_set(
    s: NumericalSemigroup, m: int, candidate: Iterable[int]
) -> bool:
    """Decide whether ``candidate`` is an upper m-set of ``s``.

    The conditions: h + m and h1 + h2 + m must be members for all
    h, h1, h2 in the set, and for each h the set must absorb every gap
    x with x - h a member.  All three hold vacuously for the empty set.
    """
    _check_modulus(s, m)
    h = frozenset(candidate)
    if not h <= s.gap_set:
        raise NotGapSubset(f"{sorted(h - s.gap_set)} are not gaps of {s}")
    if not all(s.contains(x + m) for x in h):
        return False
    if not all(s.contains(a + b + m) for a, b in itertools.combinations_with_replacement(sorted(h), 2)):
        return False
    for x in h:
        if not all(g in h for g in s.gaps if s.contains(g - x)):
            return False
    return True


def _forced_closure(s: NumericalSemigroup, seed: int) -> frozenset[int]:
    # least absorption-closed gap set containing the seed
    out = {seed}
    stack = [seed]
    while stack:
        x = stack.pop()
        for g in s.gaps:
            if g not in out and s.contains(g - x):
                out.add(g)
                stack.append(g)
    return frozenset(out)


def upper_m_sets(s: NumericalSemigroup, m: int) -> list[frozenset[int]]:
    """All nonempty upper m-sets of ``s``, in canonical order.

    Rather than filtering the power set of the gaps, this walks the
    lattice of absorption-closed sets: each valid set is a union of the
    closures of its single elements, and a violation of the two sum
    conditions in any subset persists in every superset, so failing
    unions can be pruned on first sight.  Equivalence with the plain
    power-set filter is covered by the test suite.
    """
    _check_modulus(s, m)

    def sums_ok(left: Iterable[int], right: Iterable[int]) -> bool:
        return all(s.contains(a + b + m) for a in left for b in right)

    principals = []
    seen_principals = set()
    for g in s.gaps:
        c = _forced_closure(s, g)
        if c in seen_principals:
            continue
        seen_principals.add(c)
        if all(s.contains(x + m) for x in c) and sums_ok(c, c):
            principals.append(c)

    found: set[frozenset[int]] = set(principals)
    queue = list(principals)
    while queue:
        u = queue.pop()
        for p in principals:
            if p <= u:
                continue
            w = u | p
            if w in found:
                continue
            if sums_ok(u, p - u):
                found.add(w)
                queue.append(w)
    return sorted(found, key=lambda h: tuple(sorted(h)))


def build_double(
    s: NumericalSemigroup, m: int, upper_set: Iterable[int]
) -> NumericalSemigroup:
    """The semigroup encoded by (s, m, upper_set); its half-quotient is s."""
    h = frozenset(upper_set)
    try:
        valid = is_upper_m_set(s, m, h)
    except SemigroupError as exc:
        raise InvalidCertificate(str(exc)) from exc
    if not valid:
        raise InvalidCertificate(
            f"{sorted(h)} is not an upper {m}-set of {s}"
        )
    gens = [2 * a for a in s.min_generators] + [m] + [2 * x + m for x in h]
    return NumericalSemigroup.from_generators(gens)


def frobenius_of_double(
    s: NumericalSemigroup, m: int, upper_set: Iterable[int]
) -> int:
    """Closed-form Frobenius number of the double encoded by (m, upper_set)."""
    h = frozenset(upper_set)
    try:
        valid = is_upper_m_set(s, m, h)
    except SemigroupError as exc:
        raise InvalidCertificate(str(exc)) from exc
    if not valid:
        raise InvalidCertificate(f"{sorted(h)} is not an upper {m}-set of {s}")
    if h == s.gap_set:
        return max(2 * s.frobenius, m - 2)
    return max(2 * s.frobenius, 2 * max(s.gap_set - h) + m)


def doubles_bounded(
    s: NumericalSemigroup, bound: int
) -> list[tuple[DoubleLabel, NumericalSemigroup]]:
    """All (label, T) with T/2 == s and Frobenius(T) <= bound.

    Two sources: the full gap set paired with every odd m between
    F(s)+1 and bound+2, and every proper upper m-set (the empty one
    included) for odd members m <= bound-2, kept when twice the largest
    missing gap plus m stays under the bound.  No doubles exist at all
    once 2*F(s) exceeds the bound.  For the full set the first source
    alone yields the <2, m> family; its m = 1 case is the full set
    itself and is dropped.
    """
    if bound < 1:
        raise ValueError(f"bound must be >= 1, got {bound}")
    if 2 * s.frobenius > bound:
        return []
    gaps = s.gap_set
    results: list[tuple[DoubleLabel, NumericalSemigroup]] = []

    first = s.frobenius + 1
    if first % 2 == 0:
        first += 1
    for m in range(first, bound + 3, 2):
        t = build_double(s, m, gaps)
        if t == s:
            continue
        results.append((DoubleLabel(m, gaps), t))

    for m in range(1, bound - 1, 2):
        if not s.contains(m):
            continue
        candidates = upper_m_sets(s, m) + [frozenset()]
        for h in candidates:
            if h == gaps:
                continue
            if 2 * max(gaps - h) + m <= bound:
                results.append((DoubleLabel(m, h), build_double(s, m, h)))

    results.sort(key=lambda pair: pair[1].min_generators)
    return results


def halve(s: NumericalSemigroup) -> NumericalSemigroup:
    """Members whose double lies in ``s``; the parent of ``s`` in the tree."""
    return s.quotient(2)
