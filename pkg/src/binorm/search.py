"""Exhaustive enumeration of small families and exact extremal values.

Everything here works at desk scale: up-sets and down-sets for ``n <= 5``
(7581 of each at ``n = 5``), arbitrary families for ``n <= 4`` and tuples of
up-sets for ``n <= 4``.  Restricting tuple searches to up-sets is lossless
for the monotone quantities searched here: replacing every family by its
up-closure keeps cross-dependence and never shrinks a family.

Inside the loops a family is an integer bitset over ``0 .. 2**n - 1``
(bit ``m`` set iff mask ``m`` is a member), see :class:`MonotoneTable`.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Callable, Iterator, Sequence

import numpy as np

from .constructions import threshold_cross_dependent
from .core import CapacityError, Family, binomial_row, full_mask
from .measures import norm
from .properties import max_disjoint_members
from .report import (
    COUNTEREXAMPLE,
    EQUALITY,
    VERIFIED,
    Stopwatch,
    VerificationReport,
)

__all__ = [
    "MAX_ALL_FAMILIES_N",
    "MAX_MONOTONE_N",
    "MonotoneTable",
    "SWEEP_LIMITS",
    "TUPLE_LIMITS",
    "compositions",
    "dual_bits",
    "enumerate_all_families",
    "enumerate_monotone",
    "enumerate_w_union",
    "kleitman_bound",
    "max_norm_sum_cross_dependent",
    "max_size_no_s_disjoint",
    "monotone_table",
    "tuple_sweep",
]

MAX_MONOTONE_N = 5
MAX_ALL_FAMILIES_N = 4
TUPLE_LIMITS = {2: 4, 3: 3}  # s -> largest n for norm-sum maximisation
SWEEP_LIMITS = {2: 4, 3: 4}  # s -> largest n for tuple sweeps


def _up_set_bits(n: int) -> list[int]:
    """All up-sets over ``[n]`` as bitsets, by include/exclude over masks from the top down.

    A mask may join only once all of its one-element supersets have joined,
    so every branch ends in a distinct up-set.
    """
    order = sorted(range(1 << n), key=lambda m: -m.bit_count())
    parents = [[m | (1 << i) for i in range(n) if not m >> i & 1] for m in range(1 << n)]
    out: list[int] = []

    def rec(idx: int, bits: int) -> None:
        if idx == len(order):
            out.append(bits)
            return
        m = order[idx]
        rec(idx + 1, bits)
        if all(bits >> p & 1 for p in parents[m]):
            rec(idx + 1, bits | (1 << m))

    rec(0, 0)
    return out


def _members_of_bits(bits: int) -> list[int]:
    out = []
    while bits:
        low = bits & -bits
        out.append(low.bit_length() - 1)
        bits ^= low
    return out


def dual_bits(bits: int, n: int) -> int:
    """Bitset of ``{[n] \\ F : F in bits}``."""
    top = full_mask(n)
    out = 0
    for m in _members_of_bits(bits):
        out |= 1 << (top ^ m)
    return out


def _family_sort_key(f: Family):
    return (len(f), f.members)


@lru_cache(maxsize=None)
def _monotone_bits(n: int, direction: str) -> tuple[int, ...]:
    if not 0 <= n <= MAX_MONOTONE_N:
        raise CapacityError(f"monotone enumeration supports 0 <= n <= {MAX_MONOTONE_N}, got {n}")
    ups = _up_set_bits(n)
    if direction == "up":
        bits = ups
    elif direction == "down":
        full = (1 << (1 << n)) - 1
        bits = [full ^ u for u in ups]  # complements of up-sets are exactly the down-sets
    else:
        raise ValueError(f"direction must be 'up' or 'down', got {direction!r}")
    fams = sorted((Family.from_bits(n, b) for b in bits), key=_family_sort_key)
    return tuple(f.bits for f in fams)


def enumerate_monotone(n: int, direction: str = "up") -> Iterator[Family]:
    """Every up-set (``direction="up"``) or down-set over ``[n]`` once, for ``n <= 5``.

    Families come in canonical order: by size, then by member list.
    """
    for b in _monotone_bits(n, direction):
        yield Family.from_bits(n, b)


def enumerate_all_families(n: int, contains: int | None = None, avoids: int | None = None) -> Iterator[Family]:
    """All ``2**(2**n)`` families over ``[n]`` (``n <= 4``), optionally with fixed members.

    ``contains``/``avoids`` are masks that must / must not be members.
    """
    if not 0 <= n <= MAX_ALL_FAMILIES_N:
        raise CapacityError(f"all-family enumeration supports 0 <= n <= {MAX_ALL_FAMILIES_N}, got {n}")
    free = [m for m in range(1 << n) if m != contains and m != avoids]
    base = 0 if contains is None else 1 << contains
    for choice in range(1 << len(free)):
        bits = base
        for i, m in enumerate(free):
            if choice >> i & 1:
                bits |= 1 << m
        yield Family.from_bits(n, bits)


def enumerate_w_union(n: int, w: int) -> Iterator[Family]:
    """Every ``w``-union family over ``[n]`` (all cliques of the union-compatibility graph)."""
    if not 0 <= n <= MAX_ALL_FAMILIES_N:
        raise CapacityError(f"w-union enumeration supports 0 <= n <= {MAX_ALL_FAMILIES_N}, got {n}")
    if not 0 <= w < n:
        raise ValueError(f"need 0 <= w < n, got w={w}, n={n}")
    verts = [m for m in range(1 << n) if m.bit_count() <= w]

    def rec(start: int, chosen: list[int]) -> Iterator[list[int]]:
        yield chosen
        for i in range(start, len(verts)):
            v = verts[i]
            if all((v | c).bit_count() <= w for c in chosen):
                chosen.append(v)
                yield from rec(i + 1, chosen)
                chosen.pop()

    for members in rec(0, []):
        yield Family(n, members)


class MonotoneTable:
    """Precomputed data on all up-sets over ``[n]`` for fast tuple sweeps.

    Attributes are parallel sequences indexed by up-set: ``bits``,
    ``minimal`` (minimal members), ``dual`` (bitset of member complements),
    ``counts`` (numpy ``(N, n+1)`` layer counts), ``sizes`` and ``norms``.
    ``scaled_phi[i, j] = L * counts[i, j] / C(n, j)`` with
    ``L = lcm(C(n, 0), ..., C(n, n))`` holds exact layer densities as integers.
    """

    def __init__(self, n: int) -> None:
        self.n = n
        self.bits = list(_monotone_bits(n, "up"))
        row = binomial_row(n)
        self.scale = lcm(*row)
        self.minimal = [self._minimal(b) for b in self.bits]
        self.dual = [dual_bits(b, n) for b in self.bits]
        self.counts = np.array(
            [[sum(1 for m in _members_of_bits(b) if m.bit_count() == j) for j in range(n + 1)]
             for b in self.bits],
            dtype=np.int64,
        ).reshape(len(self.bits), n + 1)
        self.sizes = self.counts.sum(axis=1)
        self.scaled_phi = self.counts * np.array([self.scale // c for c in row], dtype=np.int64)
        self.scaled_norms = self.scaled_phi.sum(axis=1)
        self.norms = [Fraction(int(v), self.scale) for v in self.scaled_norms]
        self._supersets = [self._superset_bits(m) for m in range(1 << n)]

    def _superset_bits(self, m: int) -> int:
        top = full_mask(self.n)
        free = top ^ m
        out = 0
        sub = free
        while True:
            out |= 1 << (m | sub)
            if sub == 0:
                break
            sub = (sub - 1) & free
        return out

    def _minimal(self, bits: int) -> list[int]:
        mem = sorted(_members_of_bits(bits), key=lambda m: (m.bit_count(), m))
        kept: list[int] = []
        for m in mem:
            if not any(k & m == k for k in kept):
                kept.append(m)
        return kept

    def __len__(self) -> int:
        return len(self.bits)

    def family(self, idx: int) -> Family:
        return Family.from_bits(self.n, self.bits[idx])

    def box(self, minimal_a: Sequence[int], minimal_b: Sequence[int]) -> tuple[int, list[int]]:
        """Box product of two up-sets given by minimal members: ``(bits, minimal members)``."""
        cands = {a | b for a in minimal_a for b in minimal_b if not a & b}
        bits = 0
        for c in cands:
            bits |= self._supersets[c]
        return bits, self._minimal(bits)

    def compatible(self, forbidden: int) -> np.ndarray:
        """Boolean mask of up-sets sharing no member with the bitset ``forbidden``."""
        return np.array([not b & forbidden for b in self.bits], dtype=bool)


@lru_cache(maxsize=None)
def monotone_table(n: int) -> MonotoneTable:
    return MonotoneTable(n)


def tuple_sweep(n: int, s: int, visit: Callable[[tuple[int, ...], np.ndarray], None]) -> int:
    """Drive ``visit(prefix, compatible)`` over all cross-dependent up-set ``s``-tuples.

    ``prefix`` ranges over all ordered ``(s-1)``-tuples of up-set indices and
    ``compatible`` marks the last families ``F_s`` making the tuple
    cross-dependent: for up-sets that means ``F_s`` contains no complement of
    a member of the box product of the prefix.  Returns the number of
    cross-dependent ordered tuples covered.
    """
    if s < 2:
        raise ValueError("tuple sweeps need s >= 2")
    if s not in SWEEP_LIMITS or not 0 <= n <= SWEEP_LIMITS[s]:
        limits = ", ".join(f"s={k}: n<={v}" for k, v in SWEEP_LIMITS.items())
        raise CapacityError(f"tuple sweeps support {limits}; got n={n}, s={s}")
    tab = monotone_table(n)
    total = 0
    full_minimal = [0]  # box product of zero families is {∅}, whose up-closure is everything

    def rec(prefix: tuple[int, ...], box_min: list[int], box_bits: int) -> None:
        nonlocal total
        if len(prefix) == s - 1:
            comp = tab.compatible(dual_bits(box_bits, n))
            total += int(comp.sum())
            visit(prefix, comp)
            return
        for i in range(len(tab)):
            bits, mins = tab.box(box_min, tab.minimal[i])
            rec(prefix + (i,), mins, bits)

    rec((), full_minimal, (1 << (1 << n)) - 1)
    return total


def max_norm_sum_cross_dependent(n: int, s: int) -> VerificationReport:
    """Exact maximum of the norm sum over cross-dependent ``s``-tuples (up-sets suffice).

    The maximum is compared with ``(n + 1)(s - 1)``; a larger value would be
    reported as a counterexample.  The witness is the first maximising tuple
    in index order.  Capacity: ``n <= 4`` for pairs, ``n <= 3`` for triples.
    """
    if s not in TUPLE_LIMITS or not 0 <= n <= TUPLE_LIMITS[s]:
        limits = ", ".join(f"s={k}: n<={v}" for k, v in TUPLE_LIMITS.items())
        raise CapacityError(f"norm-sum search supports {limits}; got n={n}, s={s}")
    sw = Stopwatch()
    tab = monotone_table(n)
    best = -1
    best_tuple: tuple[int, ...] | None = None
    scaled = tab.scaled_norms

    def visit(prefix, comp):
        nonlocal best, best_tuple
        idx = np.flatnonzero(comp)
        if not len(idx):
            return
        j = idx[np.argmax(scaled[idx])]
        val = int(sum(scaled[p] for p in prefix) + scaled[j])
        if val > best:
            best, best_tuple = val, prefix + (int(j),)

    cases = tuple_sweep(n, s, visit)
    value = Fraction(best, tab.scale)
    bound = Fraction((n + 1) * (s - 1))
    witness = [tab.family(i) for i in best_tuple] if best_tuple is not None else None
    status = COUNTEREXAMPLE if value > bound else (EQUALITY if value == bound else VERIFIED)
    threshold = _threshold_witness_value(n, s)
    return VerificationReport(
        theorem_id="t16",
        params={"n": n, "s": s, "mode": "exhaustive"},
        status=status,
        cases_checked=cases,
        extremal_value=value,
        bound=bound,
        sense="<=",
        witness=witness,
        counterexample=witness if status == COUNTEREXAMPLE else None,
        runtime_ms=sw.ms(),
        details={"threshold_construction_value": threshold},
    )


def _threshold_witness_value(n: int, s: int) -> Fraction | None:
    """Norm sum of the threshold tuple on window ``{1}`` with thresholds ``(1, 1, 0, ..., 0)``."""
    if n < 1:
        return None
    fams = threshold_cross_dependent(n, 1, [1, 1] + [0] * (s - 2))
    return sum((norm(f) for f in fams), Fraction(0))


def max_size_no_s_disjoint(n: int, s: int, shape: str | None = None) -> VerificationReport:
    """Exact maximum of ``|F|`` over families with no ``s`` pairwise disjoint members.

    ``shape="all"`` scans every family (``n <= 4``).  ``shape="up"`` scans
    up-sets (``n <= 5``) and accounts separately for families containing
    ``∅``: such an ``F`` is ``{∅}`` plus an ``∅``-free family with fewer than
    ``s - 1`` disjoint members, whose up-closure keeps that property.  The
    default is ``"all"`` for ``n <= 3`` and ``"up"`` otherwise.

    When ``n ≡ 0`` or ``-1 (mod s)`` the maximum is compared with the
    classical bound (``sum_{i>=k} C(n,i)`` for ``n = sk - 1``;
    ``sum_{i>k} C(n,i) + (s-1)/s C(n,k)`` for ``n = sk``).
    """
    if s < 1:
        raise ValueError(f"need s >= 1, got {s}")
    shape = shape or ("all" if n <= 3 else "up")
    sw = Stopwatch()
    best = -1
    best_fam: Family | None = None
    cases = 0
    if shape == "all":
        for fam in enumerate_all_families(n):
            cases += 1
            if len(fam) > best and max_disjoint_members(fam) < s:
                best, best_fam = len(fam), fam
    elif shape == "up":
        tab = monotone_table(n)
        nu = []
        for i in range(len(tab)):
            nu.append(max_disjoint_members(tab.family(i)))
            cases += 1
        for i in range(len(tab)):
            if nu[i] < s and tab.sizes[i] > best:
                best, best_fam = int(tab.sizes[i]), tab.family(i)
        if s >= 2:
            for i in range(len(tab)):
                if 0 not in tab.family(i) and nu[i] < s - 1 and tab.sizes[i] + 1 > best:
                    best, best_fam = int(tab.sizes[i]) + 1, tab.family(i).union(Family(n, [0]))
    else:
        raise ValueError(f"shape must be 'all' or 'up', got {shape!r}")

    bound = kleitman_bound(n, s)
    value = Fraction(best)
    if bound is None:
        status = VERIFIED
    else:
        status = COUNTEREXAMPLE if value > bound else (EQUALITY if value == bound else VERIFIED)
    return VerificationReport(
        theorem_id="kleitman",
        params={"n": n, "s": s, "mode": "exhaustive", "shape": shape},
        status=status,
        cases_checked=cases,
        extremal_value=value,
        bound=bound,
        sense="<=",
        witness=[best_fam] if best_fam is not None else None,
        counterexample=[best_fam] if status == COUNTEREXAMPLE else None,
        runtime_ms=sw.ms(),
    )


def kleitman_bound(n: int, s: int) -> Fraction | None:
    """Largest size without ``s`` disjoint members when ``n ≡ 0, -1 (mod s)``, else ``None``."""
    if s < 2:
        return None
    row = binomial_row(n)
    if (n + 1) % s == 0:
        k = (n + 1) // s
        return Fraction(sum(row[k:]))
    if n % s == 0:
        k = n // s
        return Fraction(sum(row[k + 1:])) + Fraction(s - 1, s) * row[k]
    return None


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """All ordered tuples of ``parts`` non-negative integers summing to ``total``."""
    for cuts in itertools.combinations(range(total + parts - 1), parts - 1):
        prev = -1
        out = []
        for c in cuts:
            out.append(c - prev - 1)
            prev = c
        out.append(total + parts - 2 - prev)
        yield tuple(out)
