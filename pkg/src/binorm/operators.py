"""Operators taking families to families.

All of them return new :class:`~binorm.core.Family` objects over the same
ground set as their inputs.
"""

from __future__ import annotations

from typing import Sequence

from .core import Family, full_mask, same_ground

__all__ = [
    "boundary",
    "box_product",
    "complement_family",
    "disjoint_unions",
    "down_closure",
    "dual_family",
    "minimal_members",
    "up_closure",
]


def boundary(family: Family) -> Family:
    """Sets outside ``family`` at symmetric-difference distance one from a member.

    Both neighbours ``F ∪ {x}`` and ``F \\ {x}`` count, so the boundary of
    ``{{1}}`` over ``[2]`` is ``{∅, {1,2}}``.
    """
    n = family.n
    out = set()
    for m in family.members:
        for i in range(n):
            g = m ^ (1 << i)
            if g not in family:
                out.add(g)
    return Family(n, out)


def disjoint_unions(families: Sequence[Family]) -> set[int]:
    """Masks ``F_1 ⊔ ... ⊔ F_s`` over all pairwise disjoint choices ``F_i ∈ families[i]``.

    Dynamic programme over the reachable unions of the first ``i`` families;
    the same set may be picked from different families only if it is empty.
    """
    same_ground(*families)
    reach = {0}
    for fam in families:
        nxt = set()
        for u in reach:
            for f in fam.members:
                if not u & f:
                    nxt.add(u | f)
        reach = nxt
        if not reach:
            break
    return reach


def box_product(families: Sequence[Family]) -> Family:
    """All sets expressible as a disjoint union of one member from each family."""
    n = same_ground(*families)
    return Family(n, disjoint_unions(families))


def complement_family(family: Family) -> Family:
    """``2^[n]`` minus the members of ``family``."""
    n = family.n
    return Family(n, (m for m in range(1 << n) if m not in family))


def dual_family(family: Family) -> Family:
    """Member-wise complement ``{[n] \\ F : F ∈ family}``."""
    top = full_mask(family.n)
    return Family(family.n, (top ^ m for m in family.members))


def up_closure(family: Family) -> Family:
    """Smallest up-set containing ``family``."""
    n = family.n
    seen = set(family.members)
    stack = list(family.members)
    while stack:
        m = stack.pop()
        for i in range(n):
            g = m | (1 << i)
            if g not in seen:
                seen.add(g)
                stack.append(g)
    return Family(n, seen)


def down_closure(family: Family) -> Family:
    """Smallest down-set (complex) containing ``family``."""
    n = family.n
    seen = set(family.members)
    stack = list(family.members)
    while stack:
        m = stack.pop()
        x = m
        while x:
            low = x & -x
            g = m ^ low
            if g not in seen:
                seen.add(g)
                stack.append(g)
            x ^= low
    return Family(n, seen)


def minimal_members(family: Family) -> Family:
    """Members containing no other member (the antichain generating the up-closure)."""
    kept: list[int] = []
    for m in family.members:  # canonical order lists smaller sets first
        if not any(k & m == k for k in kept):
            kept.append(m)
    return Family(family.n, kept)
