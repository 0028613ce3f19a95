"""Subsets of [n] as bitmasks, families of subsets, and exact binomials.

Element ``i`` of the ground set ``[n] = {1, ..., n}`` lives in bit ``i - 1``
of an ``int`` mask.  A :class:`Family` is an immutable, deduplicated,
canonically ordered collection of such masks sharing one ground-set size.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

__all__ = [
    "MAX_N",
    "CapacityError",
    "Family",
    "binomial",
    "binomial_row",
    "elements_of",
    "full_mask",
    "layer_profile",
    "make_family",
    "mask_of",
    "popcount",
    "power_set",
    "rational_str",
]

MAX_N = 24


class CapacityError(ValueError):
    """Raised when a request exceeds a hard size limit of the toolkit."""


def popcount(mask: int) -> int:
    return mask.bit_count()


def full_mask(n: int) -> int:
    return (1 << n) - 1


def mask_of(elements: Iterable[int], n: int) -> int:
    """Bitmask of a collection of ground elements from ``1..n``."""
    mask = 0
    for e in elements:
        if isinstance(e, bool) or not isinstance(e, int):
            raise TypeError(f"set elements must be integers, got {e!r}")
        if not 1 <= e <= n:
            raise ValueError(f"element {e} out of range 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def elements_of(mask: int) -> list[int]:
    """Sorted ground elements (1-based) of ``mask``."""
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _check_n(n: int) -> None:
    if n < 0:
        raise ValueError(f"ground-set size must be non-negative, got {n}")
    if n > MAX_N:
        raise CapacityError(f"ground-set size {n} exceeds the limit n <= {MAX_N}")


@lru_cache(maxsize=None)
def binomial_row(n: int) -> tuple[int, ...]:
    """Row ``(C(n,0), ..., C(n,n))`` of Pascal's triangle, built by the recurrence."""
    _check_n(n)
    if n == 0:
        return (1,)
    prev = binomial_row(n - 1)
    return (1,) + tuple(prev[k - 1] + prev[k] for k in range(1, n)) + (1,)


def binomial(n: int, k: int) -> int:
    """Exact ``C(n, k)`` for ``0 <= n <= MAX_N``; zero when ``k`` is outside ``0..n``.

    Raises ``CapacityError`` (a ``ValueError``) for ``n`` above the table limit
    and ``ValueError`` for negative ``n``.
    """
    _check_n(n)
    if k < 0 or k > n:
        return 0
    return binomial_row(n)[k]


def rational_str(q: Fraction | int) -> str:
    """Exact ``"p/q"`` rendering; integers keep an explicit ``/1``."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def _canonical_key(mask: int) -> tuple[int, int]:
    return (mask.bit_count(), mask)


class Family:
    """An immutable family of subsets of ``[n]``.

    Members are stored as bitmasks, deduplicated and sorted by
    ``(popcount, mask)``.  The empty family and the family ``{∅}`` are
    distinct objects: ``Family(3, [])`` versus ``Family(3, [0])``.
    """

    __slots__ = ("n", "members", "_set", "_bits")

    def __init__(self, n: int, members: Iterable[int] = ()) -> None:
        _check_n(n)
        limit = 1 << n
        uniq = set()
        for m in members:
            if not 0 <= m < limit:
                raise ValueError(f"mask {m:#x} has bits outside the ground set [{n}]")
            uniq.add(m)
        self.n = n
        self.members: tuple[int, ...] = tuple(sorted(uniq, key=_canonical_key))
        self._set = frozenset(uniq)
        self._bits: int | None = None

    @classmethod
    def from_bits(cls, n: int, bits: int) -> "Family":
        """Family whose indicator over ``0 .. 2**n - 1`` is the integer ``bits``."""
        members = []
        while bits:
            low = bits & -bits
            members.append(low.bit_length() - 1)
            bits ^= low
        fam = cls(n, members)
        return fam

    @property
    def bits(self) -> int:
        """Indicator of the family as an integer with bit ``m`` set iff mask ``m`` is a member."""
        if self._bits is None:
            b = 0
            for m in self.members:
                b |= 1 << m
            self._bits = b
        return self._bits

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: object) -> bool:
        return mask in self._set

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.n == other.n and self._set == other._set

    def __hash__(self) -> int:
        return hash((self.n, self._set))

    def __repr__(self) -> str:
        sets = ", ".join("{" + ",".join(map(str, elements_of(m))) + "}" for m in self.members[:8])
        more = ", ..." if len(self.members) > 8 else ""
        return f"Family(n={self.n}, [{sets}{more}])"

    def as_sets(self) -> list[list[int]]:
        """Members as sorted element lists, in canonical order."""
        return [elements_of(m) for m in self.members]

    def layer_counts(self) -> list[int]:
        counts = [0] * (self.n + 1)
        for m in self.members:
            counts[m.bit_count()] += 1
        return counts

    def union(self, other: "Family") -> "Family":
        same_ground(self, other)
        return Family(self.n, self._set | other._set)

    def difference(self, other: "Family") -> "Family":
        same_ground(self, other)
        return Family(self.n, self._set - other._set)


def same_ground(*families: Family) -> int:
    """Common ground-set size of ``families``; mixed sizes are rejected."""
    sizes = {f.n for f in families}
    if len(sizes) > 1:
        raise ValueError(f"families live on different ground sets: {sorted(sizes)}")
    if not sizes:
        raise ValueError("at least one family is required")
    return sizes.pop()


def make_family(n: int, sets: Iterable[Sequence[int]]) -> Family:
    """Build a family over ``[n]`` from element lists, e.g. ``make_family(3, [[1], [2, 3]])``."""
    _check_n(n)
    return Family(n, (mask_of(s, n) for s in sets))


def power_set(n: int) -> Family:
    return Family(n, range(1 << n))


def layer_profile(family: Family) -> list[Fraction]:
    """Per-layer densities ``|F^(i)| / C(n, i)`` for ``i = 0..n``."""
    row = binomial_row(family.n)
    return [Fraction(c, row[i]) for i, c in enumerate(family.layer_counts())]
