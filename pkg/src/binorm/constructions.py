"""Named extremal families used as equality witnesses."""

from __future__ import annotations

from typing import Sequence

from .core import Family, full_mask
from .properties import max_disjoint_members

__all__ = [
    "cross_size_witnesses",
    "kleitman_extremal",
    "layer_range",
    "level_complex",
    "threshold_cross_dependent",
    "threshold_family",
]


def threshold_family(n: int, window: int, j: int) -> Family:
    """All ``G ⊆ [n]`` meeting the mask ``window`` in at least ``j`` elements.

    ``j = 0`` gives the whole power set and ``j = |window| + 1`` the empty
    family.  The result is always an up-set.
    """
    if window & ~full_mask(n) or window < 0:
        raise ValueError(f"window {window:#x} is not a subset of [{n}]")
    t = window.bit_count()
    if not 0 <= j <= t + 1:
        raise ValueError(f"threshold {j} outside 0..{t + 1}")
    return Family(n, (g for g in range(1 << n) if (g & window).bit_count() >= j))


def threshold_cross_dependent(n: int, window: int, thresholds: Sequence[int]) -> list[Family]:
    """Threshold families on a common window whose thresholds sum to ``|window| + 1``.

    No ``s`` pairwise disjoint sets can each meet the window in its own
    threshold, because together they would need ``|window| + 1`` window
    elements.  The relative measures therefore sum to exactly ``s - 1``.
    """
    k = window.bit_count()
    if sum(thresholds) != k + 1:
        raise ValueError(f"thresholds {list(thresholds)} must sum to |window| + 1 = {k + 1}")
    if any(j < 0 or j > k + 1 for j in thresholds):
        raise ValueError(f"thresholds must lie in 0..{k + 1}")
    return [threshold_family(n, window, j) for j in thresholds]


def level_complex(n: int, j: int) -> Family:
    """All subsets of size at most ``j`` (``j = -1`` gives the empty family)."""
    if not -1 <= j <= n:
        raise ValueError(f"need -1 <= j <= n, got j={j}, n={n}")
    return Family(n, (m for m in range(1 << n) if m.bit_count() <= j))


def layer_range(n: int, lo: int, hi: int | None = None) -> Family:
    """All subsets whose size lies in ``lo..hi`` (``hi`` defaults to ``n``)."""
    hi = n if hi is None else hi
    return Family(n, (m for m in range(1 << n) if lo <= m.bit_count() <= hi))


def kleitman_extremal(n: int, s: int) -> tuple[Family, int]:
    """Largest family without ``s`` pairwise disjoint members when ``n ≡ 0, -1 (mod s)``.

    For ``n = sk - 1`` this is every set of size ``>= k``.  For ``n = sk`` it
    is every set of size ``> k`` together with the ``k``-sets avoiding the
    element ``n``; those are ``C(n-1, k) = (s-1)/s * C(n, k)`` sets, and
    ``s`` disjoint members would need ``sk`` elements of ``[n-1]``.

    Returns the family and its matching number (which is ``s - 1``).
    """
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if (n + 1) % s == 0:
        k = (n + 1) // s
        fam = Family(n, (m for m in range(1 << n) if m.bit_count() >= k))
    elif n % s == 0:
        k = n // s
        last = 1 << (n - 1) if n else 0
        fam = Family(
            n,
            (m for m in range(1 << n)
             if m.bit_count() > k or (m.bit_count() == k and not m & last)),
        )
    else:
        raise ValueError(f"n = {n} is neither 0 nor -1 modulo s = {s}")
    return fam, max_disjoint_members(fam)


def cross_size_witnesses(n: int, s: int) -> list[Family]:
    """Cross-dependent ``s``-tuple attaining the largest possible size sum.

    With ``n = s*l + r``, ``0 <= r < s``: the first ``r + 1`` families take
    every set larger than ``l``, the remaining ``s - r - 1`` every set of
    size at least ``l``.
    """
    if s < 2:
        raise ValueError(f"need s >= 2, got {s}")
    l, r = divmod(n, s)
    big = layer_range(n, l + 1)
    wide = layer_range(n, l)
    return [big] * (r + 1) + [wide] * (s - r - 1)
