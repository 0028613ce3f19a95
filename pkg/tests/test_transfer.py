import itertools
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from binorm.core import CapacityError, Family, layer_profile, make_family, power_set
from binorm.constructions import layer_range
from binorm.properties import are_cross_dependent
from binorm.search import compositions
from binorm.transfer import (
    TransferScenario,
    exact_gamma,
    induced_families,
    ordered_partitions,
    sample_gamma,
)
from binorm.verifier import random_cross_dependent
from conftest import families


def test_scenario_fields():
    sc = TransferScenario(5, (2, 1), 2, (3, 1, 5, 2, 4))
    assert sc.blocks == (0b00101, 0b10000)
    assert sc.tail == 0b01010
    assert sc.relabel == (2, 4)
    assert sc.lift(0b10) == 0b01000
    with pytest.raises(ValueError):
        TransferScenario(3, (1, 1), 0, (1, 2, 3))
    with pytest.raises(ValueError):
        TransferScenario(3, (1, 1), 1, (1, 1, 3))


def test_induced_families_hand_example():
    f1 = make_family(3, [[1, 3]])
    f2 = make_family(3, [[2]])
    g1, g2 = induced_families([f1, f2], TransferScenario.identity(3, (1, 1), 1))
    assert g1 == make_family(1, [[1]])
    assert g2 == Family(1, [0])


@given(families(max_n=4))
def test_identity_scenario_is_identity(fam):
    sc = TransferScenario.identity(fam.n, (0,), fam.n)
    assert induced_families([fam], sc) == [fam]


def test_power_set_induces_power_set():
    sc = TransferScenario(4, (1, 1), 2, (2, 4, 1, 3))
    assert induced_families([power_set(4)] * 2, sc) == [power_set(2)] * 2
    with pytest.raises(ValueError):
        induced_families([power_set(3)] * 2, sc)


def test_ordered_partition_count():
    parts = list(ordered_partitions(5, (2, 1), 2))
    assert len(parts) == 30  # 5! / (2! 1! 2!)
    assert len(set(parts)) == 30
    for p in parts:
        assert sum(x.bit_count() for x in p) == 5
        assert p[0] | p[1] | p[2] == 31


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_exact_gamma_matches_all_permutations(n):
    # reference: average over all n! permutations rather than distinct partitions
    rng = np.random.Generator(np.random.PCG64(n))
    fams = [Family(n, np.flatnonzero(rng.random(1 << n) < 0.5).tolist()) for _ in range(2)]
    for comp in compositions(n, 3):
        ks, r = comp[:2], comp[2]
        acc = [[Fraction(0)] * (r + 1) for _ in range(2)]
        perms = list(itertools.permutations(range(1, n + 1)))
        for pi in perms:
            gs = induced_families(fams, TransferScenario(n, ks, r, pi))
            for i, g in enumerate(gs):
                for j, v in enumerate(layer_profile(g)):
                    acc[i][j] += v / len(perms)
        assert exact_gamma(fams, ks, r) == acc


@given(families(max_n=5), st.data())
def test_exact_gamma_equals_layer_profile(fam, data):
    n = fam.n
    comp = data.draw(st.sampled_from(list(compositions(n, 3))))
    ks, r = comp[:2], comp[2]
    other = data.draw(families(n=n))
    gamma = exact_gamma([fam, other], ks, r)
    for i, f in enumerate([fam, other]):
        assert gamma[i] == layer_profile(f)[ks[i]:ks[i] + r + 1]


def test_exact_gamma_full_layers_are_zero_one():
    fam = layer_range(4, 2, 2)
    gamma = exact_gamma([fam], (1,), 3)
    assert gamma == [[0, 1, 0, 0]]


def test_exact_gamma_errors():
    with pytest.raises(CapacityError):
        exact_gamma([Family(9)], (0,), 9)
    with pytest.raises(ValueError):
        exact_gamma([Family(3)], (1,), 1)
    with pytest.raises(ValueError):
        exact_gamma([Family(3)] * 2, (1,), 2)


@given(st.integers(2, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, 10 ** 6))), st.data())
def test_induced_families_keep_cross_dependence(args, data):
    n, seed = args
    rng = np.random.Generator(np.random.PCG64(seed))
    s = data.draw(st.integers(2, 3))
    fams = random_cross_dependent(n, s, rng)
    assert are_cross_dependent(fams)
    comp = data.draw(st.sampled_from(list(compositions(n, s + 1))))
    pi = tuple(int(x) + 1 for x in rng.permutation(n))
    sc = TransferScenario(n, comp[:s], comp[s], pi)
    assert are_cross_dependent(induced_families(fams, sc))


def test_sample_gamma_power_set_is_exact():
    est = sample_gamma([power_set(5)], (2,), 3, samples=500, seed=1)
    assert np.all(est.mean == 1.0) and np.all(est.stderr == 0.0)


def test_sample_gamma_reproducible_and_thread_independent():
    fam = Family(6, range(0, 64, 3))
    a = sample_gamma([fam, fam], (1, 2), 3, samples=20_000, seed=7, threads=1)
    b = sample_gamma([fam, fam], (1, 2), 3, samples=20_000, seed=7, threads=4)
    c = sample_gamma([fam, fam], (1, 2), 3, samples=20_000, seed=8)
    assert np.array_equal(a.mean, b.mean) and np.array_equal(a.stderr, b.stderr)
    assert not np.array_equal(a.mean, c.mean)


def test_sample_gamma_errors():
    with pytest.raises(ValueError):
        sample_gamma([Family(3)], (1,), 2, samples=0, seed=1)
    with pytest.raises(ValueError):
        sample_gamma([Family(3)], (1,), 1, samples=10, seed=1)
