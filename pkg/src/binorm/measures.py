"""Binomial norm, relative measure and the one-element extension."""

from __future__ import annotations

from fractions import Fraction

from .core import MAX_N, CapacityError, Family, binomial, binomial_row

__all__ = ["norm", "rho", "extend", "extension_identity_holds"]


def norm(family: Family) -> Fraction:
    """Binomial norm: each member ``F`` contributes ``1 / C(n, |F|)``.

    Terms are collected per layer, so the cost is one division per layer.

    >>> from binorm.core import power_set
    >>> norm(power_set(3))
    Fraction(4, 1)
    """
    row = binomial_row(family.n)
    return sum(
        (Fraction(c, row[i]) for i, c in enumerate(family.layer_counts()) if c),
        Fraction(0),
    )


def rho(family: Family) -> Fraction:
    """Relative measure ``norm / (n + 1)``, always in ``[0, 1]``."""
    return norm(family) / (family.n + 1)


def extend(family: Family) -> Family:
    """Family over ``[n + 1]`` of all ``E`` with ``E ∩ [n]`` in ``family``.

    Every member ``F`` gives ``F`` and ``F ∪ {n + 1}``, so the size doubles
    while the relative measure is unchanged.
    """
    n = family.n
    if n + 1 > MAX_N:
        raise CapacityError(f"cannot extend beyond n = {MAX_N}")
    top = 1 << n
    return Family(n + 1, [m for f in family.members for m in (f, f | top)])


def extension_identity_holds(n: int, l: int) -> bool:
    """Exact check of ``1/((n+1)C(n,l)) == 1/((n+2)C(n+1,l)) + 1/((n+2)C(n+1,l+1))``."""
    if not 0 <= l <= n:
        raise ValueError(f"need 0 <= l <= n, got n={n}, l={l}")
    lhs = Fraction(1, (n + 1) * binomial(n, l))
    rhs = Fraction(1, (n + 2) * binomial(n + 1, l)) + Fraction(1, (n + 2) * binomial(n + 1, l + 1))
    return lhs == rhs
