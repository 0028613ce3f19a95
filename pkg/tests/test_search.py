import itertools

import pytest

import oracles
from binorm.core import CapacityError, Family
from binorm.operators import box_product, dual_family, up_closure
from binorm.properties import are_cross_dependent, is_w_union
from binorm.search import (
    compositions,
    dual_bits,
    enumerate_all_families,
    enumerate_monotone,
    enumerate_w_union,
    kleitman_bound,
    max_norm_sum_cross_dependent,
    max_size_no_s_disjoint,
    monotone_table,
    tuple_sweep,
)
from conftest import to_sets


@pytest.mark.parametrize("n", [0, 1, 2, 3])
def test_monotone_counts_match_filter(n):
    expected = oracles.dedekind(n)
    ups = list(enumerate_monotone(n, "up"))
    downs = list(enumerate_monotone(n, "down"))
    assert len(ups) == len(set(ups)) == expected
    assert len(downs) == len(set(downs)) == expected
    assert {to_sets(f) for f in ups} == {f for f in oracles.all_families(n) if oracles.is_up_set(f, n)}


def test_monotone_counts_larger():
    assert [sum(1 for _ in enumerate_monotone(n)) for n in range(6)] == [2, 3, 6, 20, 168, 7581]
    filtered = sum(1 for f in enumerate_all_families(4) if oracles.is_down_set(to_sets(f)))
    assert filtered == 168


def test_monotone_order_and_limits():
    fams = list(enumerate_monotone(2))
    assert fams[0] == Family(2) and fams[-1] == Family(2, range(4))
    assert [len(f) for f in fams] == sorted(len(f) for f in fams)
    with pytest.raises(CapacityError):
        next(enumerate_monotone(6))
    with pytest.raises(ValueError):
        next(enumerate_monotone(2, "sideways"))
    with pytest.raises(CapacityError):
        next(enumerate_all_families(5))


def test_all_families_with_fixed_members():
    fams = list(enumerate_all_families(2, contains=0, avoids=3))
    assert len(fams) == 4
    assert all(0 in f and 3 not in f for f in fams)


@pytest.mark.parametrize("n", [1, 2, 3])
def test_w_union_enumeration_matches_filter(n):
    for w in range(n):
        got = {to_sets(f) for f in enumerate_w_union(n, w)}
        want = {f for f in oracles.all_families(n) if oracles.is_w_union(f, w)}
        assert got == want
    with pytest.raises(ValueError):
        next(enumerate_w_union(3, 3))


def test_w_union_enumeration_n4_is_valid():
    for w in range(4):
        fams = list(enumerate_w_union(4, w))
        assert len(fams) == len(set(fams))
        assert all(is_w_union(f, w) for f in fams)


def test_compositions():
    assert sorted(compositions(2, 2)) == [(0, 2), (1, 1), (2, 0)]
    assert len(list(compositions(4, 3))) == 15
    assert list(compositions(0, 3)) == [(0, 0, 0)]


@pytest.mark.parametrize("n, s", [(0, 2), (1, 2), (2, 2), (3, 2), (2, 3)])
def test_tuple_sweep_matches_real_operations(n, s):
    tab = monotone_table(n)
    fams = [tab.family(i) for i in range(len(tab))]
    seen = 0

    def visit(prefix, comp):
        nonlocal seen
        for j in range(len(tab)):
            tup = [fams[i] for i in prefix] + [fams[j]]
            assert bool(comp[j]) == are_cross_dependent(tup)
            seen += 1

    sweep_total = tuple_sweep(n, s, visit)
    assert seen == len(tab) ** s
    brute = sum(1 for tup in itertools.product(fams, repeat=s) if are_cross_dependent(list(tup)))
    assert sweep_total == brute


@pytest.mark.parametrize("n", [2, 3])
def test_table_box_and_dual_match_operators(n):
    tab = monotone_table(n)
    for a in range(len(tab)):
        assert Family.from_bits(n, tab.dual[a]) == dual_family(tab.family(a))
        assert dual_bits(tab.bits[a], n) == tab.dual[a]
        for b in range(len(tab)):
            bits, mins = tab.box(tab.minimal[a], tab.minimal[b])
            assert Family.from_bits(n, bits) == box_product([tab.family(a), tab.family(b)])
            assert up_closure(Family(n, mins)) == Family.from_bits(n, bits)


def test_tuple_sweep_limits():
    with pytest.raises(CapacityError):
        tuple_sweep(5, 2, lambda p, c: None)
    with pytest.raises(ValueError):
        tuple_sweep(3, 1, lambda p, c: None)


@pytest.mark.parametrize("n, s, value", [(0, 2, 1), (1, 2, 2), (2, 2, 3), (3, 2, 4), (4, 2, 5), (2, 3, 6), (3, 3, 8)])
def test_max_norm_sum_values(n, s, value):
    rep = max_norm_sum_cross_dependent(n, s)
    assert rep.extremal_value == value == rep.bound
    assert rep.status == "equality-witness-found"
    assert are_cross_dependent(rep.witness)
    if n:
        assert rep.details["threshold_construction_value"] == value


def test_max_norm_sum_capacity():
    with pytest.raises(CapacityError):
        max_norm_sum_cross_dependent(9, 2)
    with pytest.raises(CapacityError):
        max_norm_sum_cross_dependent(4, 3)


@pytest.mark.parametrize("n, s, value", [(3, 3, 6), (4, 2, 8), (5, 3, 26), (3, 2, 4), (2, 2, 2), (4, 3, 12)])
def test_max_size_values(n, s, value):
    rep = max_size_no_s_disjoint(n, s)
    assert rep.extremal_value == value
    assert oracles.matching_number(to_sets(rep.witness[0])) < s


@pytest.mark.parametrize("n, s", [(2, 2), (3, 2), (3, 3), (2, 3), (4, 3)])
def test_max_size_shapes_agree(n, s):
    assert max_size_no_s_disjoint(n, s, "all").extremal_value == max_size_no_s_disjoint(n, s, "up").extremal_value


def test_kleitman_bound_values():
    assert kleitman_bound(5, 3) == 26
    assert kleitman_bound(3, 3) == 6
    assert kleitman_bound(4, 2) == 8
    assert kleitman_bound(4, 3) is None
