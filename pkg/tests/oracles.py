"""Slow, independent reference implementations over frozensets.

Nothing here imports the package: these are the oracles the bitmask code
is tested against.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb


def subsets(n):
    ground = range(1, n + 1)
    return [frozenset(c) for k in range(n + 1) for c in itertools.combinations(ground, k)]


def all_families(n):
    subs = subsets(n)
    for choice in range(1 << len(subs)):
        yield frozenset(s for i, s in enumerate(subs) if choice >> i & 1)


def norm(fam, n):
    return sum((Fraction(1, comb(n, len(f))) for f in fam), Fraction(0))


def profile(fam, n):
    return [Fraction(sum(1 for f in fam if len(f) == i), comb(n, i)) for i in range(n + 1)]


def is_antichain(fam):
    return not any(a < b for a in fam for b in fam)


def is_up_set(fam, n):
    return all(a | {x} in fam for a in fam for x in range(1, n + 1))


def is_down_set(fam):
    return all(a - {x} in fam for a in fam for x in a)


def is_intersecting(fam):
    return all(a & b for a in fam for b in fam)


def cross_dependent(fams):
    for pick in itertools.product(*[sorted(f, key=sorted) for f in fams]):
        if all(not (a & b) for a, b in itertools.combinations(pick, 2)):
            return False
    return True


def d_cross_dependent(fams, d):
    for pick in itertools.product(*[list(f) for f in fams]):
        if all(not (a & b) for a, b in itertools.combinations(pick, 2)):
            if len(frozenset().union(*pick)) <= d:
                return False
    return True


def matching_number(fam):
    members = list(fam)

    def best(start, used):
        top = 0
        for i in range(start, len(members)):
            if not members[i] & used:
                top = max(top, 1 + best(i + 1, used | members[i]))
        return top

    return best(0, frozenset())


def box(fams):
    out = set()
    for pick in itertools.product(*[list(f) for f in fams]):
        if all(not (a & b) for a, b in itertools.combinations(pick, 2)):
            out.add(frozenset().union(*pick))
    return frozenset(out)


def boundary(fam, n):
    out = set()
    for f in fam:
        for x in range(1, n + 1):
            g = f ^ {x}
            if g not in fam:
                out.add(frozenset(g))
    return frozenset(out)


def up_closure(fam, n):
    return frozenset(s for s in subsets(n) if any(f <= s for f in fam))


def down_closure(fam, n):
    return frozenset(s for s in subsets(n) if any(s <= f for f in fam))


def is_w_union(fam, w):
    return all(len(a | b) <= w for a in fam for b in fam)


def dedekind(n):
    return sum(1 for f in all_families(n) if is_up_set(f, n))
