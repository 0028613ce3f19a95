from hypothesis import given
from hypothesis import strategies as st

import oracles
from binorm.core import Family, make_family, power_set
from binorm.measures import norm
from binorm.operators import (
    boundary,
    box_product,
    complement_family,
    disjoint_unions,
    down_closure,
    dual_family,
    minimal_members,
    up_closure,
)
from conftest import families, to_sets


def test_boundary_examples():
    # {∅, {1}} over [2]: boundary {{2}, {1,2}}, norm 1/2 + 1
    f = make_family(2, [[], [1]])
    assert boundary(f).as_sets() == [[2], [1, 2]]
    assert norm(boundary(f)) == 1 + 0.5
    assert len(boundary(power_set(3))) == 0


def test_box_product_examples():
    a = make_family(3, [[1], [2]])
    b = make_family(3, [[2], [3]])
    assert box_product([a, b]).as_sets() == [[1, 2], [1, 3], [2, 3]]
    assert len(box_product([a, Family(3)])) == 0
    assert box_product([a]) == a


@given(families(max_n=4))
def test_boundary_matches_oracle(fam):
    assert to_sets(boundary(fam)) == oracles.boundary(to_sets(fam), fam.n)


@given(st.integers(0, 3).flatmap(lambda n: st.lists(families(n=n), min_size=1, max_size=3)))
def test_box_product_matches_oracle(fams):
    expected = oracles.box([to_sets(f) for f in fams])
    assert to_sets(box_product(fams)) == expected
    assert {frozenset(i + 1 for i in range(fams[0].n) if m >> i & 1)
            for m in disjoint_unions(fams)} == expected


@given(families(max_n=4))
def test_closures_match_oracle(fam):
    assert to_sets(up_closure(fam)) == oracles.up_closure(to_sets(fam), fam.n)
    assert to_sets(down_closure(fam)) == oracles.down_closure(to_sets(fam), fam.n)
    mins = minimal_members(fam)
    assert oracles.is_antichain(to_sets(mins))
    assert up_closure(mins) == up_closure(fam)


@given(families(max_n=5))
def test_complement_and_dual_are_involutions(fam):
    assert complement_family(complement_family(fam)) == fam
    assert dual_family(dual_family(fam)) == fam
    assert norm(dual_family(fam)) == norm(fam)
    assert norm(complement_family(fam)) == fam.n + 1 - norm(fam)
