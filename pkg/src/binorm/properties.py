"""Structural predicates on families.

Disjointness convention: two chosen sets are disjoint iff they do not meet.
When selecting one member from each of several families the same set may be
chosen twice, so ``∅`` picked from two families counts as a disjoint pair.
The matching number of a single family, by contrast, counts *distinct*
members.
"""

from __future__ import annotations

from typing import Sequence

from .core import Family, same_ground
from .operators import disjoint_unions, minimal_members

__all__ = [
    "PROPERTY_KINDS",
    "are_cross_dependent",
    "are_d_cross_dependent",
    "check_property",
    "is_antichain",
    "is_down_set",
    "is_intersecting",
    "is_up_set",
    "is_w_union",
    "max_disjoint_members",
]

PROPERTY_KINDS = ("antichain", "intersecting", "up-set", "down-set", "w-union")


def is_antichain(family: Family) -> bool:
    ms = family.members
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            # canonical order: |a| <= |b|, and equal-size distinct sets are incomparable
            if a & b == a:
                return False
    return True


def is_intersecting(family: Family) -> bool:
    ms = family.members
    return all(a & b for i, a in enumerate(ms) for b in ms[i:])


def is_up_set(family: Family) -> bool:
    n = family.n
    return all(m | (1 << i) in family for m in family.members for i in range(n))


def is_down_set(family: Family) -> bool:
    n = family.n
    return all(m & ~(1 << i) in family for m in family.members for i in range(n))


def is_w_union(family: Family, w: int) -> bool:
    """True iff ``|F ∪ F'| <= w`` for all (not necessarily distinct) members."""
    if not 0 <= w < family.n:
        raise ValueError(f"w-union needs 0 <= w < n, got w={w}, n={family.n}")
    ms = family.members
    return all((a | b).bit_count() <= w for i, a in enumerate(ms) for b in ms[i:])


def check_property(family: Family, kind: str, w: int | None = None) -> bool:
    """Dispatch on ``kind``, one of :data:`PROPERTY_KINDS`; ``w-union`` requires ``w``."""
    if kind == "antichain":
        return is_antichain(family)
    if kind == "intersecting":
        return is_intersecting(family)
    if kind == "up-set":
        return is_up_set(family)
    if kind == "down-set":
        return is_down_set(family)
    if kind == "w-union":
        if w is None:
            raise ValueError("w-union check needs a value for w")
        return is_w_union(family, w)
    raise ValueError(f"unknown property kind {kind!r}; expected one of {PROPERTY_KINDS}")


def max_disjoint_members(family: Family) -> int:
    """Matching number: the most distinct, pairwise disjoint members."""
    base = 1 if 0 in family else 0
    # distinct nonempty disjoint members can always be shrunk to minimal ones
    cand = [m for m in minimal_members(Family(family.n, (m for m in family.members if m))).members]
    if not cand:
        return base
    best = 0

    def search(start: int, used: int, count: int) -> None:
        nonlocal best
        if count > best:
            best = count
        free = family.n - used.bit_count()
        for idx in range(start, len(cand)):
            m = cand[idx]
            # cand is sorted by size, so no later member fits more than free // |m| times
            if count + free // m.bit_count() <= best:
                return
            if not m & used:
                search(idx + 1, used | m, count + 1)

    search(0, 0, 0)
    return base + best


def _selection_unions(families: Sequence[Family]) -> set[int]:
    same_ground(*families)
    if not families:
        raise ValueError("at least one family is required")
    return disjoint_unions([minimal_members(f) for f in families])


def are_cross_dependent(families: Sequence[Family]) -> bool:
    """True iff no choice of one member per family is pairwise disjoint."""
    return not _selection_unions(families)


def are_d_cross_dependent(families: Sequence[Family], d: int) -> bool:
    """True iff every pairwise disjoint selection has a union of more than ``d`` elements."""
    n = same_ground(*families)
    if not 0 <= d <= n:
        raise ValueError(f"need 0 <= d <= n, got d={d}, n={n}")
    return all(u.bit_count() > d for u in _selection_unions(families))
