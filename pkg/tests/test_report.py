from fractions import Fraction

import pytest

from binorm.core import make_family
from binorm.report import (
    COUNTEREXAMPLE,
    EQUALITY,
    VERIFIED,
    VerificationReport,
    classify_outcome,
)


def test_classify_outcome():
    assert classify_outcome(Fraction(1), Fraction(2), "<=") == VERIFIED
    assert classify_outcome(Fraction(2), Fraction(2), "<=") == EQUALITY
    assert classify_outcome(Fraction(3), Fraction(2), "<=") == COUNTEREXAMPLE
    assert classify_outcome(Fraction(1), Fraction(2), ">=") == COUNTEREXAMPLE
    with pytest.raises(ValueError):
        classify_outcome(Fraction(1), Fraction(2), "<")


def test_counterexample_must_carry_families():
    with pytest.raises(ValueError):
        VerificationReport("t16", {"n": 2}, COUNTEREXAMPLE, 1)


def test_json_round_trip_and_timing_switch():
    fam = make_family(3, [[1], [2, 3]])
    rep = VerificationReport("t16", {"n": 3, "s": 2}, EQUALITY, 5, Fraction(4), Fraction(4),
                             witness=[fam, fam], runtime_ms=17, details={"x": Fraction(1, 3)})
    d = rep.to_dict()
    assert d["extremal_value"] == "4/1" and d["runtime_ms"] == 17
    assert d["details"]["x"] == "1/3"
    assert d["witness"] == [[[1], [2, 3]]] * 2
    assert rep.to_dict(timing=False)["runtime_ms"] == 0
    back = VerificationReport.from_dict(d)
    assert back.witness == [fam, fam] and back.extremal_value == 4 and back.ok
