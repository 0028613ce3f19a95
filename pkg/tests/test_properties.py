import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from binorm.core import Family, make_family, power_set
from binorm.operators import up_closure
from binorm.properties import (
    are_cross_dependent,
    are_d_cross_dependent,
    check_property,
    is_antichain,
    is_down_set,
    is_intersecting,
    is_up_set,
    is_w_union,
    max_disjoint_members,
)
from conftest import families, family_tuples, to_sets


def test_predicate_examples():
    assert is_antichain(make_family(3, [[1], [2, 3]]))
    assert not is_antichain(make_family(3, [[1], [1, 3]]))
    assert is_intersecting(make_family(3, [[1, 2], [1, 3]]))
    assert not is_intersecting(make_family(3, [[]]))  # ∅ meets nothing, not even itself
    assert is_up_set(power_set(2)) and is_down_set(power_set(2))
    assert is_up_set(Family(2)) and is_down_set(Family(2))
    assert is_w_union(make_family(3, [[1], [2]]), 2)
    assert not is_w_union(make_family(3, [[1], [2, 3]]), 2)


def test_check_property_dispatch():
    f = make_family(3, [[1], [2]])
    assert check_property(f, "antichain")
    assert check_property(f, "w-union", w=2)
    with pytest.raises(ValueError):
        check_property(f, "w-union")
    with pytest.raises(ValueError):
        check_property(f, "sunflower")
    with pytest.raises(ValueError):
        is_w_union(f, 3)


def test_cross_dependence_examples():
    assert are_cross_dependent([power_set(3), Family(3)])
    assert not are_cross_dependent([make_family(3, [[1]]), make_family(3, [[2]])])
    assert are_cross_dependent([make_family(3, [[1]]), make_family(3, [[1, 2]])])
    # {1} and {2} are disjoint with union of size 2
    pair = [make_family(3, [[1]]), make_family(3, [[2]])]
    assert are_d_cross_dependent(pair, 1)
    assert not are_d_cross_dependent(pair, 2)
    with pytest.raises(ValueError):
        are_d_cross_dependent(pair, 4)


@given(families(max_n=4))
def test_predicates_match_oracle(fam):
    sets = to_sets(fam)
    assert is_antichain(fam) == oracles.is_antichain(sets)
    assert is_up_set(fam) == oracles.is_up_set(sets, fam.n)
    assert is_down_set(fam) == oracles.is_down_set(sets)
    assert is_intersecting(fam) == oracles.is_intersecting(sets)


@given(families(max_n=4))
def test_matching_number_matches_oracle(fam):
    assert max_disjoint_members(fam) == oracles.matching_number(to_sets(fam))


@given(st.integers(2, 3).flatmap(lambda s: family_tuples(s=s, max_n=3)))
def test_cross_dependence_matches_oracle(fams):
    sets = [to_sets(f) for f in fams]
    assert are_cross_dependent(fams) == oracles.cross_dependent(sets)
    for d in range(fams[0].n + 1):
        assert are_d_cross_dependent(fams, d) == oracles.d_cross_dependent(sets, d)


@given(family_tuples(s=2, max_n=4))
def test_up_closure_keeps_cross_dependence(fams):
    if are_cross_dependent(fams):
        assert are_cross_dependent([up_closure(f) for f in fams])


@given(family_tuples(s=2, max_n=4))
def test_d_equal_n_is_plain_cross_dependence(fams):
    assert are_d_cross_dependent(fams, fams[0].n) == are_cross_dependent(fams)


@given(families(max_n=4), st.integers(2, 4))
def test_matching_number_versus_repeated_selection(fam, s):
    # copies of ∅ are pairwise disjoint, so s copies of a family holding ∅ are
    # never cross-dependent; without ∅ the two notions coincide
    if 0 in fam:
        assert not are_cross_dependent([fam] * s)
    else:
        assert (max_disjoint_members(fam) < s) == are_cross_dependent([fam] * s)
