"""Independent brute-force helpers used to cross-check the library.

Everything here recomputes values by a route different from the
implementation under test: plain reachability instead of the sieve,
power-set filtering instead of closure-lattice walking.
"""

import itertools
import math

from hypothesis import strategies as st

from numsem import NumericalSemigroup


def closure_members(gens, bound):
    """All generator sums up to ``bound`` by plain reachability."""
    reach = {0}
    stack = [0]
    while stack:
        x = stack.pop()
        for g in gens:
            y = x + g
            if y <= bound and y not in reach:
                reach.add(y)
                stack.append(y)
    return reach


def naive_gap_set(gens):
    """Gap set of the generated semigroup, growing the window until stable."""
    m = min(gens)
    bound = 4 * max(gens)
    while True:
        reach = closure_members(gens, bound)
        run = 0
        for x in range(bound + 1):
            run = run + 1 if x in reach else 0
            if run == m:
                conductor = x - m + 1
                return {i for i in range(1, conductor) if i not in reach}
        bound *= 2


def naive_upper_sets(s, m, include_empty=False):
    """Upper m-sets by filtering the full power set of the gaps."""
    gaps = s.gaps
    out = [frozenset()] if include_empty else []
    for r in range(1, len(gaps) + 1):
        for combo in itertools.combinations(gaps, r):
            h = set(combo)
            shifts_ok = all(s.contains(x + m) for x in h)
            sums_ok = all(s.contains(a + b + m) for a in h for b in h)
            absorbed = all(
                x in h for hh in h for x in gaps if s.contains(x - hh)
            )
            if shifts_ok and sums_ok and absorbed:
                out.append(frozenset(h))
    return sorted(out, key=lambda h: tuple(sorted(h)))


def random_semigroup(rng, max_gen=20, max_count=4):
    """Seeded random semigroup from a gcd-1 generator draw."""
    while True:
        gens = [rng.randint(2, max_gen) for _ in range(rng.randint(1, max_count))]
        if math.gcd(*gens) == 1:
            return NumericalSemigroup.from_generators(gens)


def semigroups(max_gen=20, max_count=4):
    """Hypothesis strategy drawing arbitrary small semigroups."""
    return (
        st.lists(st.integers(1, max_gen), min_size=1, max_size=max_count)
        .filter(lambda gs: math.gcd(*gs) == 1)
        .map(NumericalSemigroup.from_generators)
    )
