from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from binorm.core import (
    MAX_N,
    CapacityError,
    Family,
    binomial,
    binomial_row,
    elements_of,
    full_mask,
    layer_profile,
    make_family,
    mask_of,
    power_set,
    rational_str,
    same_ground,
)
from conftest import families, to_sets


def test_mask_round_trip():
    assert mask_of([1, 3], 3) == 0b101
    assert elements_of(0b101) == [1, 3]
    assert mask_of([], 0) == 0
    assert full_mask(4) == 15


@pytest.mark.parametrize("elems, n", [([0], 3), ([4], 3), ([-1], 2)])
def test_mask_rejects_out_of_range(elems, n):
    with pytest.raises(ValueError):
        mask_of(elems, n)


def test_mask_rejects_non_int():
    with pytest.raises(TypeError):
        mask_of(["1"], 3)


def test_binomials_match_math_comb():
    for n in range(MAX_N + 1):
        assert list(binomial_row(n)) == [comb(n, k) for k in range(n + 1)]
    assert binomial(5, -1) == 0 and binomial(5, 6) == 0
    with pytest.raises(CapacityError):
        binomial(MAX_N + 1, 2)


def test_rational_str_keeps_denominator():
    assert rational_str(Fraction(4)) == "4/1"
    assert rational_str(Fraction(2, 6)) == "1/3"
    assert rational_str(0) == "0/1"


def test_family_canonical_and_deduplicated():
    f = Family(3, [0b110, 0b001, 0b001, 0])
    assert f.members == (0, 0b001, 0b110)
    assert f == Family(3, [0b110, 0, 0b001])
    assert hash(f) == hash(Family(3, [0, 1, 6]))
    assert Family(3, []) != Family(3, [0])
    assert Family(2, [1]) != Family(3, [1])


def test_family_rejects_foreign_masks():
    with pytest.raises(ValueError):
        Family(2, [4])
    with pytest.raises(CapacityError):
        Family(MAX_N + 1, [])


def test_make_family_and_power_set():
    f = make_family(3, [[1], [2, 3], []])
    assert f.as_sets() == [[], [1], [2, 3]]
    assert len(power_set(4)) == 16
    assert layer_profile(power_set(3)) == [1, 1, 1, 1]


def test_layer_profile_values():
    f = make_family(3, [[1], [2, 3]])
    assert layer_profile(f) == [0, Fraction(1, 3), Fraction(1, 3), 0]
    assert f.layer_counts() == [0, 1, 1, 0]


def test_same_ground_checks():
    with pytest.raises(ValueError):
        same_ground(Family(2), Family(3))
    with pytest.raises(ValueError):
        same_ground()
    assert same_ground(Family(2), Family(2, [1])) == 2


@given(families())
def test_bits_round_trip(fam):
    assert Family.from_bits(fam.n, fam.bits) == fam
    assert bin(fam.bits).count("1") == len(fam)


@given(families(), st.data())
def test_union_difference_agree_with_sets(fam, data):
    other = data.draw(families(n=fam.n))
    assert to_sets(fam.union(other)) == to_sets(fam) | to_sets(other)
    assert to_sets(fam.difference(other)) == to_sets(fam) - to_sets(other)
