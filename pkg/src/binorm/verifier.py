"""Exact checks of the binomial-norm inequalities, one input at a time or as sweeps.

Every ``verify_*`` routine re-checks its hypothesis (cross-dependence,
monotonicity, ...) before comparing, and raises :class:`PreconditionError`
when it fails: a false hypothesis would otherwise "verify" anything.
Comparisons use :class:`fractions.Fraction` throughout.

Sweeps return one :class:`VerificationReport` whose ``extremal_value`` and
``bound`` are taken from the tightest case seen.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable, Sequence

import numpy as np

from .constructions import layer_range, level_complex
from .core import CapacityError, Family, binomial, binomial_row, full_mask, layer_profile, same_ground
from .measures import extend, norm, rho
from .operators import box_product, complement_family, down_closure, dual_family, up_closure
from .properties import (
    are_cross_dependent,
    are_d_cross_dependent,
    is_antichain,
    is_down_set,
    is_up_set,
    is_w_union,
    max_disjoint_members,
)
from .report import (
    COUNTEREXAMPLE,
    EQUALITY,
    VERIFIED,
    PreconditionError,
    Stopwatch,
    VerificationReport,
    classify_outcome,
)
from .search import (
    SWEEP_LIMITS,
    compositions,
    dual_bits,
    enumerate_all_families,
    enumerate_monotone,
    enumerate_w_union,
    kleitman_bound,
    monotone_table,
    tuple_sweep,
)
from .transfer import exact_gamma

__all__ = [
    "LymCheck",
    "PairClass",
    "classify_pair",
    "exact_transfer_sweep",
    "is_full_layer",
    "layer_sum_exceeds",
    "lym_report",
    "merge_reports",
    "random_cross_dependent",
    "random_family",
    "random_up_set",
    "random_w_union",
    "ratio_exceeds_four",
    "recheck",
    "sample_sweep",
    "sweep_boundary",
    "sweep_box_lower",
    "sweep_self_cross_dependent",
    "sweep_cross_size_sum",
    "sweep_d_cross",
    "sweep_extension",
    "sweep_lym",
    "sweep_multilayer",
    "sweep_size_norm",
    "sweep_union_bounds",
    "two_layer_identity",
    "verify_box_lower",
    "verify_boundary",
    "verify_cross_norm",
    "verify_cross_size_sum",
    "verify_d_cross",
    "verify_kleitman_sizes",
    "verify_lym",
    "verify_multilayer",
    "verify_size_norm",
    "verify_union_bounds",
]


SAMPLE_MAX_N = 10

# ---------------------------------------------------------------- helpers

def _instance_report(theorem_id, params, lhs, bound, sense, families, sw, details=None):
    status = classify_outcome(lhs, bound, sense)
    return VerificationReport(
        theorem_id=theorem_id,
        params=params,
        status=status,
        cases_checked=1,
        extremal_value=lhs,
        bound=bound,
        sense=sense,
        witness=list(families) if status == EQUALITY else None,
        counterexample=list(families) if status == COUNTEREXAMPLE else None,
        runtime_ms=sw.ms(),
        details=details or {},
    )


class _Tally:
    """Running summary of a sweep: tightest case, first counterexample, equality cases."""

    def __init__(self, sense: str, keep_equalities: int = 0) -> None:
        self.sense = sense
        self.cases = 0
        self.slack: Fraction | None = None
        self.lhs: Fraction | None = None
        self.bound: Fraction | None = None
        self.tightest: list[Family] | None = None
        self.tight_info: dict = {}
        self.counterexample: list[Family] | None = None
        self.counter_details: dict = {}
        self.equalities = 0
        self.keep = keep_equalities
        self.equality_witnesses: list[list[Family]] = []

    def add(self, lhs: Fraction, bound: Fraction, families: Callable[[], list[Family]] | list[Family],
            info: dict | None = None) -> None:
        """Record one case; ``families`` may be a thunk so it is only built when kept."""
        def fams():
            return families() if callable(families) else list(families)

        self.cases += 1
        slack = bound - lhs if self.sense == "<=" else lhs - bound
        if self.slack is None or slack < self.slack:
            self.slack, self.lhs, self.bound = slack, lhs, bound
            self.tightest = fams()
            self.tight_info = dict(info or {})
        if slack == 0:
            self.equalities += 1
            if len(self.equality_witnesses) < self.keep:
                self.equality_witnesses.append(fams())
        if slack < 0 and self.counterexample is None:
            self.counterexample = fams()
            self.counter_details = dict(info or {})

    def fail(self, families: list[Family], **details) -> None:
        """Record a counterexample to a side condition (e.g. an equality characterisation)."""
        if self.counterexample is None:
            self.counterexample = list(families)
            self.counter_details = details

    def report(self, theorem_id: str, params: dict, sw: Stopwatch, details: dict | None = None) -> VerificationReport:
        details = dict(details or {})
        details["equality_cases"] = self.equalities
        if self.tight_info:
            details["tightest"] = self.tight_info
        if self.equality_witnesses:
            details["equality_witnesses"] = self.equality_witnesses
        if self.counter_details:
            details["failure"] = self.counter_details
        if self.counterexample is not None:
            status = COUNTEREXAMPLE
        elif self.equalities:
            status = EQUALITY
        else:
            status = VERIFIED
        return VerificationReport(
            theorem_id=theorem_id,
            params=params,
            status=status,
            cases_checked=self.cases,
            extremal_value=self.lhs,
            bound=self.bound,
            sense=self.sense,
            witness=self.tightest,
            counterexample=self.counterexample,
            runtime_ms=sw.ms(),
            details=details,
        )


def _require_cross_dependent(families: Sequence[Family]) -> None:
    if not are_cross_dependent(families):
        raise PreconditionError("the families are not cross-dependent")


def is_full_layer(family: Family) -> bool:
    """True iff ``family`` is exactly the ``i``-th layer of ``2^[n]`` for some ``i``."""
    if not len(family):
        return False
    size = family.members[0].bit_count()
    return len(family) == binomial(family.n, size) and all(m.bit_count() == size for m in family)


def _is_level_complex(family: Family) -> bool:
    counts = family.layer_counts()
    row = binomial_row(family.n)
    j = -1
    while j + 1 <= family.n and counts[j + 1] == row[j + 1]:
        j += 1
    return all(c == 0 for c in counts[j + 1:])


# ---------------------------------------------------------------- LYM

@dataclass(frozen=True)
class LymCheck:
    norm: Fraction
    antichain: bool
    holds: bool
    equality: bool


def verify_lym(family: Family) -> LymCheck:
    """Norm of ``family`` and whether "antichain implies norm <= 1" holds for it.

    For a non-antichain the implication is vacuous and ``holds`` is true.
    ``equality`` flags an antichain of norm exactly one, which happens only
    for a full layer.
    """
    value = norm(family)
    anti = is_antichain(family)
    return LymCheck(norm=value, antichain=anti, holds=(not anti) or value <= 1,
                    equality=anti and value == 1)


def lym_report(family: Family) -> VerificationReport:
    """:func:`verify_lym` as a report; a non-antichain is a vacuous pass."""
    sw = Stopwatch()
    chk = verify_lym(family)
    if chk.antichain:
        return _instance_report("lym", {"n": family.n}, chk.norm, Fraction(1), "<=", [family], sw,
                                {"antichain": True, "full_layer": is_full_layer(family)})
    return VerificationReport("lym", {"n": family.n}, VERIFIED, 1, chk.norm, Fraction(1),
                              runtime_ms=sw.ms(), details={"antichain": False, "vacuous": True})


def sweep_lym(n: int) -> VerificationReport:
    """All antichains over ``[n]``: norm at most one, equal to one exactly on full layers.

    Antichains are generated as the maximal members of each down-set
    (``n <= 5``).  For ``n <= 4`` every one of the ``2**(2**n)`` families is
    also filtered directly, and both routes must produce the same antichains.
    """
    sw = Stopwatch()
    tally = _Tally("<=", keep_equalities=n + 1)
    generated = set()
    for down in enumerate_monotone(n, "down"):
        anti = Family(n, (m for m in down.members
                          if not any(m | (1 << i) in down for i in range(n) if not m >> i & 1)))
        generated.add(anti)
        chk = verify_lym(anti)
        if not chk.antichain:
            tally.fail([anti], reason="maximal members of a down-set are not an antichain")
        tally.add(chk.norm, Fraction(1), [anti])
        if chk.equality != is_full_layer(anti):
            tally.fail([anti], reason="equality case is not a full layer")
    details = {"antichains_from_down_sets": len(generated)}
    if n <= 4:
        filtered = 0
        for fam in enumerate_all_families(n):
            if not is_antichain(fam):
                continue
            filtered += 1
            chk = verify_lym(fam)
            tally.add(chk.norm, Fraction(1), [fam])
            if chk.equality != is_full_layer(fam):
                tally.fail([fam], reason="equality case is not a full layer")
            if fam not in generated:
                tally.fail([fam], reason="antichain missed by the down-set route")
        details["antichains_by_filter"] = filtered
        if filtered != len(generated):
            tally.fail([Family(n)], reason=f"route counts differ: {filtered} vs {len(generated)}")
    return tally.report("lym", {"n": n, "mode": "exhaustive"}, sw, details)


# ---------------------------------------------------------------- extension

def sweep_extension(max_exhaustive_n: int = 3, random_count: int = 10_000,
                    random_max_n: int = 10, seed: int = 0) -> VerificationReport:
    """Relative measure is unchanged by the one-element extension.

    Checks every family for ``n <= max_exhaustive_n`` and ``random_count``
    random families with ``n <= random_max_n``.
    """
    sw = Stopwatch()
    cases = 0
    bad = None
    for n in range(max_exhaustive_n + 1):
        for fam in enumerate_all_families(n):
            cases += 1
            if bad is None and rho(extend(fam)) != rho(fam):
                bad = fam
    rng = np.random.Generator(np.random.PCG64(seed))
    for _ in range(random_count):
        n = int(rng.integers(0, random_max_n + 1))
        fam = random_family(n, rng)
        cases += 1
        if bad is None and rho(extend(fam)) != rho(fam):
            bad = fam
    return VerificationReport(
        theorem_id="extension",
        params={"n": random_max_n, "max_exhaustive_n": max_exhaustive_n,
                "random_count": random_count, "seed": seed},
        status=COUNTEREXAMPLE if bad is not None else VERIFIED,
        cases_checked=cases,
        counterexample=[bad] if bad is not None else None,
        sense="==",
        runtime_ms=sw.ms(),
    )


# ---------------------------------------------------------------- cross-dependence

def verify_cross_norm(families: Sequence[Family]) -> VerificationReport:
    """Relative measures of cross-dependent families sum to at most ``s - 1``."""
    sw = Stopwatch()
    n = same_ground(*families)
    _require_cross_dependent(families)
    s = len(families)
    lhs = sum((rho(f) for f in families), Fraction(0))
    bound = Fraction(s - 1)
    return _instance_report("t16", {"n": n, "s": s}, lhs, bound, "<=", families, sw,
                            {"slack": bound - lhs, "norm_sum": lhs * (n + 1)})


def _multilayer_lhs(profiles: Sequence[Sequence[Fraction]], ks: Sequence[int], r: int) -> Fraction:
    return sum((prof[k + j] for prof, k in zip(profiles, ks) for j in range(r + 1)), Fraction(0))


def verify_multilayer(families: Sequence[Family], ks: Sequence[int], r: int) -> VerificationReport:
    """``sum_{0<=j<=r} sum_i phi_i(k_i + j) <= (r + 1)(s - 1)`` for cross-dependent families.

    ``k_1 + ... + k_s + r`` must equal ``n``.  With ``r = 0`` this is the
    single-layer inequality ``sum_i phi_i(k_i) <= s - 1``; with all
    ``k_i = 0`` and ``r = n`` it is the norm-sum bound.
    """
    sw = Stopwatch()
    n = same_ground(*families)
    s = len(families)
    if len(ks) != s or any(k < 0 for k in ks) or r < 0 or sum(ks) + r != n:
        raise ValueError(f"need {s} non-negative block sizes with sum(ks) + r = n = {n}; "
                         f"got ks={list(ks)}, r={r}")
    _require_cross_dependent(families)
    lhs = _multilayer_lhs([layer_profile(f) for f in families], ks, r)
    bound = Fraction((r + 1) * (s - 1))
    return _instance_report("multilayer", {"n": n, "s": s, "ks": list(ks), "r": r},
                            lhs, bound, "<=", families, sw)


def sweep_multilayer(n: int, s: int) -> VerificationReport:
    """Every cross-dependent up-set ``s``-tuple over ``[n]`` against every composition.

    Restricting to up-sets is lossless because up-closure keeps
    cross-dependence and only raises layer densities.  For each prefix of
    ``s - 1`` up-sets, the last family is maximised over all compatible
    up-sets, so every tuple's left-hand side is bounded by the value checked.
    Layer densities are scaled to integers by ``lcm_i C(n, i)``.
    """
    sw = Stopwatch()
    tab = monotone_table(n)
    scale = tab.scale
    N = len(tab)
    # cum[c, k, r] = scale * sum_{j<=r} phi_c(k + j), for k + r <= n
    cum = np.zeros((N, n + 1, n + 1), dtype=np.int64)
    for k in range(n + 1):
        run = np.zeros(N, dtype=np.int64)
        for r in range(n + 1 - k):
            run = run + tab.scaled_phi[:, k + r]
            cum[:, k, r] = run
    comps = np.array(list(compositions(n, s + 1)), dtype=np.int64)  # (C, s+1): k_1..k_s, r
    rs = comps[:, s]
    bounds = scale * (rs + 1) * (s - 1)
    state = {"best": None, "prefix": None, "comp": None, "cases": 0, "r0_best": None}

    def visit(prefix, comp):
        idx = np.flatnonzero(comp)
        if not len(idx):
            return
        state["cases"] += len(idx) * len(comps)
        last = cum[idx].max(axis=0)  # (n+1, n+1)
        val = last[comps[:, s - 1], rs]
        for i, p in enumerate(prefix):
            val = val + cum[p, comps[:, i], rs]
        margin = val - bounds
        t = int(np.argmax(margin))
        if state["best"] is None or margin[t] > state["best"]:
            state.update(best=int(margin[t]), prefix=prefix, comp=tuple(int(x) for x in comps[t]))
        r0 = margin[rs == 0].max()
        if state["r0_best"] is None or r0 > state["r0_best"]:
            state["r0_best"] = int(r0)

    tuple_sweep(n, s, visit)
    comp = state["comp"]
    ks, r = list(comp[:s]), comp[s]
    # rebuild the tightest tuple: best compatible last family for that composition
    fams = [tab.family(p) for p in state["prefix"]]
    box = box_product(fams) if fams else Family(n, [0])
    forb = dual_bits(up_closure(box).bits, n)
    cands = [i for i in range(N) if not tab.bits[i] & forb]
    last = max(cands, key=lambda i: (cum[i, ks[-1], r], -i))
    fams.append(tab.family(last))
    lhs = Fraction(int(state["best"]) + scale * (r + 1) * (s - 1), scale)
    bound = Fraction((r + 1) * (s - 1))
    status = classify_outcome(lhs, bound, "<=")
    return VerificationReport(
        theorem_id="multilayer",
        params={"n": n, "s": s, "mode": "exhaustive"},
        status=status,
        cases_checked=state["cases"],
        extremal_value=lhs,
        bound=bound,
        sense="<=",
        witness=fams,
        counterexample=fams if status == COUNTEREXAMPLE else None,
        runtime_ms=sw.ms(),
        details={"tightest": {"ks": ks, "r": r},
                 "single_layer_max_margin": Fraction(state["r0_best"], scale)},
    )


def sweep_self_cross_dependent(n: int, s: int) -> VerificationReport:
    """Single family without ``s`` disjoint selections: ``rho <= (s - 1)/s``.

    The hypothesis is that ``s`` copies of ``F`` are cross-dependent (the
    same set may be selected repeatedly).  For comparison ``details`` also
    lists up-sets whose distinct-member matching number is below ``s`` but
    which exceed the bound; these all contain ``∅``.
    """
    sw = Stopwatch()
    tab = monotone_table(n)
    tally = _Tally("<=", keep_equalities=1)
    bound = Fraction(s - 1, s)
    distinct_only = []
    for i in range(len(tab)):
        fam = tab.family(i)
        box_bits, box_min = tab.bits[i], tab.minimal[i]
        for _ in range(s - 2):
            box_bits, box_min = tab.box(box_min, tab.minimal[i])
        crossdep = not (box_bits & dual_bits(tab.bits[i], n)) if s >= 2 else not len(fam)
        value = rho(fam)
        if crossdep:
            tally.add(value, bound, [fam])
        elif max_disjoint_members(fam) < s and value > bound:
            distinct_only.append(fam)
    return tally.report("self-cross", {"n": n, "s": s, "mode": "exhaustive"}, sw,
                        {"distinct_member_exceptions": distinct_only})


# ---------------------------------------------------------------- d-cross-dependence

def verify_d_cross(families: Sequence[Family], d: int) -> VerificationReport:
    """``sum ||F_i|| <= (n + 1)s - (d + 1)`` for ``d``-cross-dependent families.

    Also checks the reduction behind it: adding ``{F : |F| >= n - d}``
    (norm ``d + 1``) yields a cross-dependent ``(s + 1)``-tuple.
    """
    sw = Stopwatch()
    n = same_ground(*families)
    if not are_d_cross_dependent(families, d):
        raise PreconditionError(f"the families are not {d}-cross-dependent")
    s = len(families)
    lhs = sum((norm(f) for f in families), Fraction(0))
    bound = Fraction((n + 1) * s - (d + 1))
    extra = layer_range(n, n - d)
    extra_norm = norm(extra)
    extended_ok = are_cross_dependent(list(families) + [extra])
    rep = _instance_report("t22", {"n": n, "s": s, "d": d}, lhs, bound, "<=", families, sw,
                           {"added_family_norm": extra_norm, "extended_tuple_cross_dependent": extended_ok})
    if extra_norm != d + 1 or not extended_ok:
        rep.status = COUNTEREXAMPLE
        rep.counterexample = list(families)
    return rep


def sweep_d_cross(n: int) -> VerificationReport:
    """All ``d``-cross-dependent pairs of up-sets over ``[n]`` (``n <= 4``), every ``d``."""
    if not 0 <= n <= SWEEP_LIMITS[2]:
        raise CapacityError(f"d-cross-dependent sweep supports n <= {SWEEP_LIMITS[2]}, got {n}")
    sw = Stopwatch()
    tab = monotone_table(n)
    tally = _Tally("<=")
    scale = tab.scale
    large_duals = [dual_bits(layer_range(n, n - d).bits, n) for d in range(n + 1)]
    for a in range(len(tab)):
        for b in range(len(tab)):
            bits, _ = tab.box(tab.minimal[a], tab.minimal[b])
            smallest = min((m.bit_count() for m in range(1 << n) if bits >> m & 1), default=n + 1)
            total = Fraction(int(tab.scaled_norms[a] + tab.scaled_norms[b]), scale)
            for d in range(min(smallest, n + 1)):  # d-cross-dependent iff d < smallest union
                bound = Fraction((n + 1) * 2 - (d + 1))
                tally.add(total, bound, lambda a=a, b=b: [tab.family(a), tab.family(b)], {"d": d})
                if bits & large_duals[d]:
                    tally.fail([tab.family(a), tab.family(b)], d=d,
                               reason="adding the large-set family did not give a cross-dependent triple")
    return tally.report("t22", {"n": n, "s": 2, "mode": "exhaustive"}, sw)


# ---------------------------------------------------------------- box product

def verify_box_lower(families: Sequence[Family]) -> VerificationReport:
    """``||F_1 □ ... □ F_s|| >= sum ||F_i|| - (s - 1)(n + 1)`` when ``F_1`` is an up-set."""
    sw = Stopwatch()
    n = same_ground(*families)
    if not is_up_set(families[0]):
        raise PreconditionError("the first family must be an up-set")
    s = len(families)
    box = box_product(families)
    lhs = norm(box)
    bound = sum((norm(f) for f in families), Fraction(0)) - (s - 1) * (n + 1)
    complement_norm = norm(complement_family(dual_family(box)))
    rep = _instance_report("t24", {"n": n, "s": s}, lhs, bound, ">=", families, sw,
                           {"complement_of_dual_norm": complement_norm})
    if complement_norm != (n + 1) - lhs:
        rep.status = COUNTEREXAMPLE
        rep.counterexample = list(families)
    return rep


def sweep_box_lower(n: int) -> VerificationReport:
    """Up-set ``F_1`` against every family ``F_2`` over ``[n]`` (``n <= 3``)."""
    if not 0 <= n <= 3:
        raise CapacityError("exhaustive box-product sweep supports n <= 3")
    sw = Stopwatch()
    tally = _Tally(">=", keep_equalities=3)
    others = list(enumerate_all_families(n))
    for f1 in enumerate_monotone(n, "up"):
        n1 = norm(f1)
        for f2 in others:
            lhs = norm(box_product([f1, f2]))
            tally.add(lhs, n1 + norm(f2) - (n + 1), [f1, f2])
    return tally.report("t24", {"n": n, "s": 2, "mode": "exhaustive"}, sw)


# ---------------------------------------------------------------- boundary

def verify_boundary(family: Family) -> VerificationReport:
    """Boundary norm at least one when ``∅ ∈ F`` and ``[n] ∉ F``; equality only for level complexes."""
    from .operators import boundary

    sw = Stopwatch()
    n = family.n
    if 0 not in family or full_mask(n) in family:
        raise PreconditionError("need the empty set inside and the full ground set outside the family")
    lhs = norm(boundary(family))
    level = _is_level_complex(family)
    rep = _instance_report("t31", {"n": n}, lhs, Fraction(1), ">=", [family], sw,
                           {"level_complex": level})
    if (lhs == 1) != level:
        rep.status = COUNTEREXAMPLE
        rep.counterexample = [family]
    return rep


def sweep_boundary(n: int) -> VerificationReport:
    """All families over ``[n]`` containing ``∅`` and not ``[n]`` (``1 <= n <= 4``)."""
    from .operators import boundary

    sw = Stopwatch()
    tally = _Tally(">=", keep_equalities=n + 1)
    for fam in enumerate_all_families(n, contains=0, avoids=full_mask(n)):
        lhs = norm(boundary(fam))
        tally.add(lhs, Fraction(1), [fam])
        if (lhs == 1) != _is_level_complex(fam):
            tally.fail([fam], reason="equality does not match the level-complex characterisation")
    expected = [level_complex(n, j) for j in range(n)]
    found = [w[0] for w in tally.equality_witnesses]
    details = {"equality_witnesses_are_level_complexes": sorted(found, key=len) == expected}
    return tally.report("t31", {"n": n, "mode": "exhaustive"}, sw, details)


# ---------------------------------------------------------------- w-union

def union_bounds(n: int, w: int) -> tuple[int, Fraction]:
    """Size bound and norm bound for ``w``-union families over ``[n]``."""
    row = binomial_row(n)
    if w % 2 == 0:
        l = w // 2
        return sum(row[:l + 1]), Fraction(l + 1)
    l = (w + 1) // 2
    return sum(row[:l]) + binomial(n - 1, l - 1), l + Fraction(l, n)


def _union_checks(family: Family, w: int) -> tuple[Fraction, Fraction, list[str]]:
    n = family.n
    size_bound, norm_bound = union_bounds(n, w)
    f = family.layer_counts() + [0] * (w + 2)
    failed = []
    if len(family) > size_bound:
        failed.append("size")
    value = norm(family)
    if value > norm_bound:
        failed.append("norm")
    for i in range(1, w + 1):
        if 2 * i >= w + 1:
            break
        if f[i] + f[w + 1 - i] > binomial(n, i):
            failed.append(f"layers {i},{w + 1 - i}")
    if w % 2 == 1:
        l = (w + 1) // 2
        if f[l] > binomial(n - 1, l - 1):
            failed.append(f"middle layer {l}")
    return value, norm_bound, failed


def verify_union_bounds(family: Family, w: int) -> VerificationReport:
    """Size, norm and pairwise-layer bounds for a ``w``-union family.

    With ``w = 2l``: ``|F| <= sum_{i<=l} C(n,i)`` and ``||F|| <= l + 1``.
    With ``w = 2l - 1``: ``|F| <= sum_{i<l} C(n,i) + C(n-1,l-1)`` and
    ``||F|| <= l + l/n``.  In both cases ``f_i + f_{w+1-i} <= C(n,i)`` for
    ``1 <= i < (w+1)/2``, and for odd ``w`` also ``f_l <= C(n-1, l-1)``.
    """
    sw = Stopwatch()
    if not is_w_union(family, w):
        raise PreconditionError(f"the family is not {w}-union")
    value, bound, failed = _union_checks(family, w)
    size_bound, _ = union_bounds(family.n, w)
    rep = _instance_report("katona", {"n": family.n, "w": w}, value, bound, "<=", [family], sw,
                           {"size": len(family), "size_bound": size_bound, "failed": failed})
    if failed:
        rep.status = COUNTEREXAMPLE
        rep.counterexample = [family]
    return rep


def sweep_union_bounds(n: int, w: int) -> VerificationReport:
    """Every ``w``-union family over ``[n]`` (``n <= 4``)."""
    sw = Stopwatch()
    tally = _Tally("<=", keep_equalities=4)
    size_bound, _ = union_bounds(n, w)
    largest = 0
    for fam in enumerate_w_union(n, w):
        value, bound, failed = _union_checks(fam, w)
        largest = max(largest, len(fam))
        tally.add(value, bound, [fam])
        if failed:
            tally.fail([fam], failed=failed)
    return tally.report("katona", {"n": n, "w": w, "mode": "exhaustive"}, sw,
                        {"largest_size": largest, "size_bound": size_bound})


# ---------------------------------------------------------------- size versus norm

class PairClass(str, Enum):
    PERFECT = "Perfect"
    QUASI_PERFECT = "QuasiPerfect"
    NEITHER = "Neither"


def layer_sum_exceeds(n: int, l: int, k: int) -> bool:
    """Exact truth of ``sum_{l<=j<=k} C(n, j) > (k - l + 1) C(n, l)`` for ``n > k > l >= 0``."""
    if not n > k > l >= 0:
        raise ValueError(f"need n > k > l >= 0, got n={n}, k={k}, l={l}")
    row = binomial_row(n)
    return sum(row[l:k + 1]) > (k - l + 1) * row[l]


def classify_pair(n: int, l: int) -> PairClass:
    """Classify ``(n, l)`` by the layer-sum inequality for every admissible ``k``.

    ``Perfect`` when it holds for all ``l < k <= n - 1``, ``QuasiPerfect``
    when it holds up to ``k = n - 2`` only, ``Neither`` otherwise.
    """
    if not n > l >= 0:
        raise ValueError(f"need n > l >= 0, got n={n}, l={l}")
    if not all(layer_sum_exceeds(n, l, k) for k in range(l + 1, n - 1)):
        return PairClass.NEITHER
    if n - 1 > l and not layer_sum_exceeds(n, l, n - 1):
        return PairClass.QUASI_PERFECT
    return PairClass.PERFECT


def ratio_exceeds_four(n: int, l: int) -> bool:
    """Diagnostic: ``(n - l)(n + 1) / ((l + 2)(l + 1)) > 4``."""
    return Fraction((n - l) * (n + 1), (l + 2) * (l + 1)) > 4


def two_layer_identity(n: int, l: int) -> bool:
    """Exact check of ``C(n,l+1) + C(n,l+2) == C(n,l) (n-l)(n+1) / ((l+2)(l+1))``."""
    lhs = binomial(n, l + 1) + binomial(n, l + 2)
    return Fraction(lhs) == binomial(n, l) * Fraction((n - l) * (n + 1), (l + 2) * (l + 1))


def size_norm_bound(n: int, l: int, value: Fraction) -> Fraction:
    row = binomial_row(n)
    return sum(row[:l]) + (value - l) * row[l]


def verify_size_norm(family: Family, l: int, mode: str = "perfect") -> VerificationReport:
    """``|F| >= sum_{i<l} C(n,i) + (||F|| - l) C(n,l)`` for a complex ``F``.

    ``mode="perfect"`` requires ``||F|| < n + 1``; ``mode="quasi"`` requires
    ``||F|| < (n + 1)/2``.
    """
    sw = Stopwatch()
    n = family.n
    if not n > l >= 0:
        raise ValueError(f"need n > l >= 0, got n={n}, l={l}")
    if not is_down_set(family):
        raise PreconditionError("the family is not a complex (down-set)")
    value = norm(family)
    limit = _norm_limit(n, mode)
    if not value < limit:
        raise PreconditionError(f"norm {value} is not below {limit} ({mode} mode)")
    bound = size_norm_bound(n, l, value)
    return _instance_report("p42", {"n": n, "l": l, "norm_mode": mode}, Fraction(len(family)), bound, ">=",
                            [family], sw, {"norm": value})


def _norm_limit(n: int, mode: str) -> Fraction:
    if mode == "perfect":
        return Fraction(n + 1)
    if mode == "quasi":
        return Fraction(n + 1, 2)
    raise ValueError(f"mode must be 'perfect' or 'quasi', got {mode!r}")


def sweep_size_norm(n: int, l: int, mode: str = "perfect") -> VerificationReport:
    """Every complex over ``[n]`` (``n <= 5``) within the norm limit of ``mode``."""
    sw = Stopwatch()
    limit = _norm_limit(n, mode)
    tally = _Tally(">=", keep_equalities=3)
    skipped = 0
    for fam in enumerate_monotone(n, "down"):
        value = norm(fam)
        if not value < limit:
            skipped += 1
            continue
        tally.add(Fraction(len(fam)), size_norm_bound(n, l, value), [fam])
    return tally.report("p42", {"n": n, "l": l, "norm_mode": mode, "mode": "exhaustive"}, sw,
                        {"outside_norm_limit": skipped, "lemma_classification": classify_pair(n, l).value})


# ---------------------------------------------------------------- disjoint members and size sums

def verify_kleitman_sizes(family: Family, s: int) -> VerificationReport:
    """Size of a family with no ``s`` pairwise disjoint members, for ``n ≡ 0, -1 (mod s)``."""
    sw = Stopwatch()
    n = family.n
    bound = kleitman_bound(n, s)
    if bound is None:
        raise PreconditionError(f"n = {n} is neither 0 nor -1 modulo s = {s}")
    nu = max_disjoint_members(family)
    if nu >= s:
        raise PreconditionError(f"the family has {nu} >= {s} pairwise disjoint members")
    return _instance_report("kleitman", {"n": n, "s": s}, Fraction(len(family)), bound, "<=",
                            [family], sw, {"matching_number": nu})


def cross_size_bounds(n: int, s: int) -> tuple[int, int]:
    """Upper bound on ``sum |F_i|`` and the equivalent lower bound on ``sum |2^[n] \\ F_i|``."""
    l, r = divmod(n, s)
    row = binomial_row(n)
    upper = s * sum(row[l + 1:]) + (s - r - 1) * row[l]
    lower = s * sum(row[:l]) + (r + 1) * row[l]
    return upper, lower


def verify_cross_size_sum(families: Sequence[Family]) -> VerificationReport:
    """Total size of cross-dependent ``F_1, ..., F_s`` with ``n = s*l + r``, ``0 <= r < s``.

    Upper bound ``s sum_{j>l} C(n,j) + (s - r - 1) C(n,l)``; the complements
    must meet the lower bound ``s sum_{j<l} C(n,j) + (r + 1) C(n,l)``, and
    the two verdicts are required to agree.
    """
    sw = Stopwatch()
    n = same_ground(*families)
    s = len(families)
    if s < 2:
        raise PreconditionError("need at least two families")
    _require_cross_dependent(families)
    upper, lower = cross_size_bounds(n, s)
    total = sum(len(f) for f in families)
    comp_total = s * (1 << n) - total
    rep = _instance_report("t51", {"n": n, "s": s}, Fraction(total), Fraction(upper), "<=", families, sw,
                           {"complement_total": comp_total, "complement_bound": lower})
    if (total <= upper) != (comp_total >= lower):
        rep.status = COUNTEREXAMPLE
        rep.counterexample = list(families)
    return rep


def sweep_cross_size_sum(n: int, s: int) -> VerificationReport:
    """Every cross-dependent up-set ``s``-tuple over ``[n]`` against the size-sum bound."""
    sw = Stopwatch()
    tab = monotone_table(n)
    upper, lower = cross_size_bounds(n, s)
    state = {"best": -1, "tuple": None, "hits": 0}

    def visit(prefix, comp):
        idx = np.flatnonzero(comp)
        if not len(idx):
            return
        j = int(idx[np.argmax(tab.sizes[idx])])
        val = int(sum(tab.sizes[p] for p in prefix) + tab.sizes[j])
        if val > state["best"]:
            state.update(best=val, tuple=prefix + (j,))
        if val == upper:
            state["hits"] += 1

    cases = tuple_sweep(n, s, visit)
    fams = [tab.family(i) for i in state["tuple"]]
    value = Fraction(state["best"])
    status = classify_outcome(value, Fraction(upper), "<=")
    agree = (state["best"] <= upper) == (s * (1 << n) - state["best"] >= lower)
    if not agree:
        status = COUNTEREXAMPLE
    return VerificationReport(
        theorem_id="t51",
        params={"n": n, "s": s, "mode": "exhaustive"},
        status=status,
        cases_checked=cases,
        extremal_value=value,
        bound=Fraction(upper),
        sense="<=",
        witness=fams,
        counterexample=fams if status == COUNTEREXAMPLE else None,
        runtime_ms=sw.ms(),
        details={"complement_bound": lower, "complement_form_agrees": agree},
    )


def merge_reports(reports: Sequence[VerificationReport]) -> VerificationReport:
    """Combine reports of one theorem into one.

    The first counterexample wins; otherwise the tightest case (smallest
    slack) supplies the extremal value and witness.  Case counts add up.
    """
    if not reports:
        raise ValueError("nothing to merge")
    first = reports[0]
    tally = _Tally(first.sense)
    for rep in reports:
        fams = rep.counterexample or rep.witness or []
        if rep.status == COUNTEREXAMPLE:
            tally.fail(fams, **rep.params)
        if rep.extremal_value is not None:
            tally.add(rep.extremal_value, rep.bound, fams, rep.params)
            tally.cases += rep.cases_checked - 1
        else:
            tally.cases += rep.cases_checked
    out = tally.report(first.theorem_id, dict(first.params), Stopwatch(), {"merged_reports": len(reports)})
    out.runtime_ms = sum(r.runtime_ms for r in reports)
    return out


# ---------------------------------------------------------------- random instances

def random_family(n: int, rng: np.random.Generator) -> Family:
    """Each subset joins independently with a probability that is itself uniform."""
    p = rng.random()
    keep = rng.random(1 << n) < p
    return Family(n, np.flatnonzero(keep).tolist())


def random_up_set(n: int, rng: np.random.Generator) -> Family:
    """Up-closure of up to ``n + 1`` uniform random subsets."""
    count = int(rng.integers(0, n + 2))
    gens = [int(x) for x in rng.integers(0, 1 << n, size=count)] if n else [0] * min(count, 1)
    return up_closure(Family(n, gens))


def random_cross_dependent(n: int, s: int, rng: np.random.Generator) -> list[Family]:
    """Random cross-dependent ``s``-tuple (always cross-dependent by construction).

    ``s - 1`` random up-sets fix the last family as the largest one
    compatible with them; every family is then thinned at random (subfamilies
    stay cross-dependent) and the order shuffled.
    """
    fams = [random_up_set(n, rng) for _ in range(s - 1)]
    box = up_closure(box_product(fams)) if fams else Family(n, range(1 << n))
    last = complement_family(dual_family(box))
    fams.append(last)
    thinned = []
    for f in fams:
        keep = rng.random(len(f)) < rng.uniform(0.5, 1.0)
        thinned.append(Family(n, [m for m, k in zip(f.members, keep) if k]))
    order = rng.permutation(s)
    return [thinned[i] for i in order]


def random_w_union(n: int, w: int, rng: np.random.Generator) -> Family:
    """Greedy random ``w``-union family."""
    chosen: list[int] = []
    for m in rng.permutation(1 << n):
        m = int(m)
        if m.bit_count() <= w and all((m | c).bit_count() <= w for c in chosen) and rng.random() < 0.7:
            chosen.append(m)
    return Family(n, chosen)


def sample_sweep(theorem_id: str, n: int, samples: int, seed: int, s: int = 2,
                 **params) -> VerificationReport:
    """Check ``samples`` random instances of ``theorem_id`` drawn with a seeded PCG64 generator.

    Draws that miss the hypothesis (some generators are not exact) are
    skipped and counted in ``details["skipped"]``.  Extra keyword
    parameters: ``w`` for ``katona``, ``l`` and ``norm_mode`` for ``p42``.
    """
    if samples <= 0:
        raise ValueError("samples must be positive")
    if not 0 <= n <= SAMPLE_MAX_N:
        raise CapacityError(f"sampled checks support n <= {SAMPLE_MAX_N}, got {n}")
    sw = Stopwatch()
    rng = np.random.Generator(np.random.PCG64(seed))
    tally: _Tally | None = None
    skipped = 0
    for _ in range(samples):
        try:
            rep, fams, info = _sample_one(theorem_id, n, s, rng, params)
        except PreconditionError:
            skipped += 1
            continue
        if tally is None:
            tally = _Tally(rep.sense)
        if rep.status == COUNTEREXAMPLE:
            tally.fail(fams, **info, **{k: v for k, v in rep.details.items() if k == "failed"})
        tally.add(rep.extremal_value, rep.bound, fams, info)
    out_params = {"n": n, "s": s, "mode": "sample", "samples": samples, "seed": seed, **params}
    if tally is None:
        return VerificationReport(theorem_id, out_params, VERIFIED, 0, runtime_ms=sw.ms(),
                                  details={"skipped": skipped})
    return tally.report(theorem_id, out_params, sw, {"skipped": skipped})


def _sample_one(theorem_id: str, n: int, s: int, rng: np.random.Generator,
                params: dict) -> tuple[VerificationReport, list[Family], dict]:
    info: dict = {}
    if theorem_id == "t16":
        fams = random_cross_dependent(n, s, rng)
        rep = verify_cross_norm(fams)
    elif theorem_id == "multilayer":
        fams = random_cross_dependent(n, s, rng)
        comps = list(compositions(n, s + 1))
        comp = comps[int(rng.integers(len(comps)))]
        info = {"ks": list(comp[:s]), "r": comp[s]}
        rep = verify_multilayer(fams, comp[:s], comp[s])
    elif theorem_id == "t22":
        fams = [random_up_set(n, rng) for _ in range(s)]
        smallest = min((m.bit_count() for m in box_product(fams).members), default=n + 1)
        if smallest == 0:
            raise PreconditionError("no admissible d")
        info = {"d": int(rng.integers(0, min(smallest, n + 1)))}
        rep = verify_d_cross(fams, info["d"])
    elif theorem_id == "t24":
        fams = [random_up_set(n, rng)] + [random_family(n, rng) for _ in range(s - 1)]
        rep = verify_box_lower(fams)
    elif theorem_id == "t31":
        fam = random_family(n, rng).union(Family(n, [0])).difference(Family(n, [full_mask(n)]))
        fams = [fam]
        rep = verify_boundary(fam)
    elif theorem_id == "katona":
        w = params.get("w")
        info = {"w": int(rng.integers(0, n)) if w is None else w}
        fams = [random_w_union(n, info["w"], rng)]
        rep = verify_union_bounds(fams[0], info["w"])
    elif theorem_id == "lym":
        raw = random_family(n, rng)
        fams = [Family(n, [m for m in raw.members
                           if not any(o != m and o & m == m for o in raw.members)])]
        chk = verify_lym(fams[0])
        status = classify_outcome(chk.norm, Fraction(1), "<=") if chk.antichain else VERIFIED
        rep = VerificationReport("lym", {"n": n}, status, 1, chk.norm, Fraction(1), "<=",
                                 counterexample=fams if status == COUNTEREXAMPLE else None)
    elif theorem_id == "p42":
        gens = [int(x) for x in rng.integers(0, 1 << n, size=int(rng.integers(0, n + 2)))]
        fams = [down_closure(Family(n, gens))]
        rep = verify_size_norm(fams[0], params.get("l", 1), params.get("norm_mode", "perfect"))
    elif theorem_id == "t51":
        fams = random_cross_dependent(n, s, rng)
        rep = verify_cross_size_sum(fams)
    elif theorem_id == "kleitman":
        fams = [random_up_set(n, rng)]
        rep = verify_kleitman_sizes(fams[0], s)
    else:
        raise ValueError(f"no sampler for theorem {theorem_id!r}")
    return rep, fams, info


# ---------------------------------------------------------------- re-checking

def recheck(report: VerificationReport) -> VerificationReport:
    """Re-run the instance check on a report's counterexample (or tightest witness).

    Uses only ``theorem_id``, ``params``, the families and the case context
    stored under ``details["failure"]`` or ``details["tightest"]``.
    """
    if report.counterexample:
        fams, ctx = report.counterexample, report.details.get("failure", {})
    elif report.witness:
        fams, ctx = report.witness, report.details.get("tightest", {})
    else:
        raise ValueError("the report carries no families to re-check")
    p = {**report.params, **ctx}
    tid = report.theorem_id
    if tid == "t16":
        return verify_cross_norm(fams)
    if tid == "multilayer":
        return verify_multilayer(fams, p["ks"], p["r"])
    if tid == "t22":
        return verify_d_cross(fams, p["d"])
    if tid == "t24":
        return verify_box_lower(fams)
    if tid == "t31":
        return verify_boundary(fams[0])
    if tid == "katona":
        return verify_union_bounds(fams[0], p["w"])
    if tid == "p42":
        return verify_size_norm(fams[0], p["l"], p.get("norm_mode", "perfect"))
    if tid == "kleitman":
        return verify_kleitman_sizes(fams[0], p["s"])
    if tid == "t51":
        return verify_cross_size_sum(fams)
    raise ValueError(f"cannot re-check reports of kind {tid!r}")


def exact_transfer_sweep(families: Iterable[Family], s: int = 2) -> VerificationReport:
    """Expected induced layer densities equal the original ones, for every composition.

    Each family fills every slot of an ``s``-tuple, so all ``(k, r)`` with
    ``k + r <= n`` are exercised.
    """
    sw = Stopwatch()
    cases = 0
    bad = None
    n_seen = None
    for fam in families:
        n = fam.n
        n_seen = n
        prof = layer_profile(fam)
        for comp in compositions(n, s + 1):
            ks, r = comp[:s], comp[s]
            gamma = exact_gamma([fam] * s, ks, r)
            cases += 1
            if any(gamma[i][j] != prof[ks[i] + j] for i in range(s) for j in range(r + 1)):
                bad = bad or [fam]
    return VerificationReport(
        theorem_id="transfer",
        params={"n": n_seen, "s": s, "mode": "exhaustive"},
        status=COUNTEREXAMPLE if bad else VERIFIED,
        cases_checked=cases,
        sense="==",
        counterexample=bad,
        runtime_ms=sw.ms(),
    )
