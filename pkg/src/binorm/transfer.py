"""Random ordered partitions of the ground set and the families they induce.

A permutation ``π = (y_1, ..., y_n)`` of ``[n]`` is cut into consecutive
blocks ``P_1, ..., P_s`` of sizes ``k_1, ..., k_s`` followed by a tail ``R``
of size ``r``; the tail is relabelled onto ``[r]`` by position
(``y_{n-r+i} ↦ i``).  Family ``i`` induces

    G_i = {G ⊆ [r] : P_i ∪ relabel⁻¹(G) ∈ F_i}.

Averaged over uniform permutations, the density of layer ``j`` of ``G_i``
equals the density of layer ``k_i + j`` of ``F_i``.  :func:`exact_gamma`
computes that average by enumeration; :func:`sample_gamma` estimates it.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from .core import CapacityError, Family, binomial, binomial_row, same_ground

__all__ = [
    "EXACT_GAMMA_MAX_N",
    "GammaEstimate",
    "TransferScenario",
    "exact_gamma",
    "induced_families",
    "ordered_partitions",
    "sample_gamma",
]

EXACT_GAMMA_MAX_N = 8
SAMPLE_CHUNK = 8192


def _check_composition(n: int, ks: Sequence[int], r: int) -> None:
    if any(k < 0 for k in ks) or r < 0:
        raise ValueError(f"block sizes must be non-negative, got ks={list(ks)}, r={r}")
    if sum(ks) + r != n:
        raise ValueError(f"block sizes {list(ks)} plus r={r} must sum to n={n}")


@dataclass(frozen=True)
class TransferScenario:
    """One ordered partition ``(P_1, ..., P_s, R)`` read off a permutation of ``[n]``.

    ``pi`` lists the ground elements (1-based) in permutation order.
    """

    n: int
    ks: tuple[int, ...]
    r: int
    pi: tuple[int, ...]
    blocks: tuple[int, ...] = field(init=False)
    tail: int = field(init=False)
    relabel: tuple[int, ...] = field(init=False)

    def __post_init__(self) -> None:
        _check_composition(self.n, self.ks, self.r)
        if sorted(self.pi) != list(range(1, self.n + 1)):
            raise ValueError(f"pi = {self.pi} is not a permutation of 1..{self.n}")
        blocks = []
        pos = 0
        for k in self.ks:
            blocks.append(sum(1 << (y - 1) for y in self.pi[pos:pos + k]))
            pos += k
        tail_elems = self.pi[pos:]
        object.__setattr__(self, "blocks", tuple(blocks))
        object.__setattr__(self, "tail", sum(1 << (y - 1) for y in tail_elems))
        # relabel[i] = ground element mapped to i + 1
        object.__setattr__(self, "relabel", tuple(tail_elems))

    @classmethod
    def identity(cls, n: int, ks: Sequence[int], r: int) -> "TransferScenario":
        return cls(n, tuple(ks), r, tuple(range(1, n + 1)))

    def lift(self, g: int) -> int:
        """Ground-set mask of ``relabel⁻¹(g)`` for a mask ``g`` over ``[r]``."""
        out = 0
        for i, y in enumerate(self.relabel):
            if g >> i & 1:
                out |= 1 << (y - 1)
        return out


def induced_families(families: Sequence[Family], scenario: TransferScenario) -> list[Family]:
    """The families ``G_i`` over ``[r]`` induced by ``scenario``."""
    n = same_ground(*families)
    if n != scenario.n or len(families) != len(scenario.ks):
        raise ValueError(
            f"scenario is for n={scenario.n}, s={len(scenario.ks)}; "
            f"got n={n}, s={len(families)}"
        )
    r = scenario.r
    lifts = [scenario.lift(g) for g in range(1 << r)]
    return [
        Family(r, (g for g in range(1 << r) if p | lifts[g] in fam))
        for fam, p in zip(families, scenario.blocks)
    ]


def ordered_partitions(n: int, ks: Sequence[int], r: int):
    """Every ordered partition ``(P_1, ..., P_s, R)`` of ``[n]`` as a tuple of masks.

    There are ``n! / (k_1! ... k_s! r!)`` of them; the tail comes last.
    """
    _check_composition(n, ks, r)

    def rec(free: int, i: int):
        if i == len(ks):
            yield (free,)
            return
        elems = [b for b in range(n) if free >> b & 1]
        for combo in itertools.combinations(elems, ks[i]):
            p = sum(1 << b for b in combo)
            for rest in rec(free ^ p, i + 1):
                yield (p,) + rest

    yield from rec((1 << n) - 1, 0)


@lru_cache(maxsize=256)
def _layer_windows(n: int, ks: tuple[int, ...], r: int) -> tuple[int, tuple[tuple[tuple[int, ...], ...], ...]]:
    """Partition count and bit-sliced window multiplicities per slot and tail layer.

    For slot ``i``, a partition contributes the window of masks ``P_i ∪ T``
    with ``T ⊆ R``, ``|T| = j``; ``|G_i^(j)|`` is the number of members in
    it.  Summed over partitions, mask ``m`` is hit ``mult[m]`` times.  The
    multiplicities are stored as bit slices: slice ``b`` is the bitset over
    ``0 .. 2**n - 1`` of masks whose multiplicity has bit ``b`` set, so
    ``sum_p |F ∩ window_p| = sum_b popcount(F & slice_b) << b``.
    """
    s = len(ks)
    mult = [[[0] * (1 << n) for _ in range(r + 1)] for _ in range(s)]
    count = 0
    for part in ordered_partitions(n, ks, r):
        count += 1
        tail = part[-1]
        t = tail
        while True:  # all submasks of the tail
            j = t.bit_count()
            for i in range(s):
                mult[i][j][part[i] | t] += 1
            if t == 0:
                break
            t = (t - 1) & tail
    slices = []
    for i in range(s):
        per_j = []
        for j in range(r + 1):
            vec = mult[i][j]
            top = max(vec).bit_length()
            per_j.append(tuple(
                sum(1 << m for m, c in enumerate(vec) if c >> b & 1) for b in range(top)
            ))
        slices.append(tuple(per_j))
    return count, tuple(slices)


def exact_gamma(families: Sequence[Family], ks: Sequence[int], r: int) -> list[list[Fraction]]:
    """Exact expected layer densities of the induced families.

    Entry ``[i][j]`` averages ``|G_i^(j)| / C(r, j)`` over all ordered
    partitions with block sizes ``ks`` and tail size ``r``.
    """
    n = same_ground(*families)
    if len(families) != len(ks):
        raise ValueError(f"got {len(families)} families but {len(ks)} block sizes")
    _check_composition(n, ks, r)
    if n > EXACT_GAMMA_MAX_N:
        raise CapacityError(f"exact enumeration supports n <= {EXACT_GAMMA_MAX_N}, got {n}")
    count, slices = _layer_windows(n, tuple(ks), r)
    row = binomial_row(r)
    out = []
    for fam, per_j in zip(families, slices):
        bits = fam.bits
        out.append([
            Fraction(
                sum((bits & sl).bit_count() << b for b, sl in enumerate(per_j[j])),
                count * row[j],
            )
            for j in range(r + 1)
        ])
    return out


@dataclass(frozen=True)
class GammaEstimate:
    """Monte Carlo estimate of the induced layer densities, with standard errors."""

    mean: np.ndarray
    stderr: np.ndarray
    samples: int
    seed: int


def _indicator(fam: Family) -> np.ndarray:
    ind = np.zeros(1 << fam.n, dtype=bool)
    ind[list(fam.members)] = True
    return ind


def _sample_chunk(indicators, ks, r, n, size, seed_seq):
    rng = np.random.Generator(np.random.PCG64(seed_seq))
    perms = rng.permuted(np.tile(np.arange(n), (size, 1)), axis=1)
    weights = (1 << perms).astype(np.int64)
    # all submasks of [r] as rows of bits, and their sizes
    gsub = np.arange(1 << r)
    gbits = ((gsub[:, None] >> np.arange(r)) & 1).astype(np.int64)
    tail = weights[:, n - r:]
    lifted = tail @ gbits.T  # (size, 2**r): ground mask of relabel^-1(G)
    onehot = np.zeros((1 << r, r + 1))
    onehot[gsub, gbits.sum(axis=1)] = 1.0
    inv_binom = 1.0 / np.array([binomial(r, j) for j in range(r + 1)])
    sums = np.zeros((len(ks), r + 1))
    sqs = np.zeros((len(ks), r + 1))
    pos = 0
    for i, k in enumerate(ks):
        p = weights[:, pos:pos + k].sum(axis=1)
        pos += k
        hits = indicators[i][p[:, None] + lifted]
        vals = (hits @ onehot) * inv_binom
        sums[i] += vals.sum(axis=0)
        sqs[i] += (vals * vals).sum(axis=0)
    return sums, sqs


def sample_gamma(
    families: Sequence[Family],
    ks: Sequence[int],
    r: int,
    samples: int,
    seed: int,
    threads: int | None = None,
) -> GammaEstimate:
    """Estimate the induced layer densities from ``samples`` uniform permutations.

    Permutations come from numpy's PCG64 generator; the samples are split
    into fixed chunks with seeds spawned from ``SeedSequence(seed)``, so the
    estimate depends only on ``seed`` and ``samples``, never on ``threads``.
    """
    n = same_ground(*families)
    if len(families) != len(ks):
        raise ValueError(f"got {len(families)} families but {len(ks)} block sizes")
    _check_composition(n, ks, r)
    if samples <= 0:
        raise ValueError("samples must be positive")
    if threads is None:
        threads = int(os.environ.get("BINORM_THREADS", "1"))
    indicators = [_indicator(f) for f in families]
    sizes = [SAMPLE_CHUNK] * (samples // SAMPLE_CHUNK)
    if samples % SAMPLE_CHUNK:
        sizes.append(samples % SAMPLE_CHUNK)
    seeds = np.random.SeedSequence(seed).spawn(len(sizes))
    jobs = [(indicators, tuple(ks), r, n, size, ss) for size, ss in zip(sizes, seeds)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda a: _sample_chunk(*a), jobs))
    else:
        parts = [_sample_chunk(*a) for a in jobs]
    total = np.zeros((len(ks), r + 1))
    total_sq = np.zeros((len(ks), r + 1))
    for sums, sqs in parts:  # fixed chunk order keeps the result thread-independent
        total += sums
        total_sq += sqs
    mean = total / samples
    var = np.maximum(total_sq / samples - mean * mean, 0.0)
    stderr = np.sqrt(var / max(samples - 1, 1))
    return GammaEstimate(mean=mean, stderr=stderr, samples=samples, seed=seed)
