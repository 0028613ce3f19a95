import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from binorm.core import Family, make_family
from binorm.familyio import FamilyFileError, dumps_json, dumps_text, load, loads_json, loads_text
from conftest import families


@given(st.integers(0, 5).flatmap(lambda n: st.lists(families(n=n), max_size=4)))
def test_round_trips(fams):
    n = fams[0].n if fams else 3
    assert loads_text(dumps_text(n, fams)) == (n, fams)
    assert loads_json(dumps_json(n, fams)) == (n, fams)


def test_text_format_details():
    text = "n=3\n.\n1\n2 3\n\n-\n\n1 2 3\n"
    n, fams = loads_text(text)
    assert n == 3
    assert fams == [make_family(3, [[], [1], [2, 3]]), Family(3), make_family(3, [[1, 2, 3]])]
    assert dumps_text(3, [Family(3)]) == "n=3\n-\n"


@pytest.mark.parametrize("text, line", [
    ("n=2\n0\n", 2),
    ("n=2\n1\n\n3\n", 4),
    ("n=2\n1 x\n", 2),
    ("m=2\n1\n", 1),
    ("\n\nn=two\n", 3),
    ("n=2\n-\n1\n", 3),
])
def test_text_errors_carry_line_numbers(text, line):
    with pytest.raises(FamilyFileError) as exc:
        loads_text(text)
    assert exc.value.line == line
    assert f"at line {line}" in str(exc.value)


def test_out_of_range_message():
    with pytest.raises(FamilyFileError, match=r"element out of range .* at line 2"):
        loads_text("n=3\n0 1\n")


@pytest.mark.parametrize("payload", [
    "[1, 2]",
    '{"n": 2}',
    '{"n": -1, "families": []}',
    '{"n": 2, "families": [[[3]]]}',
    '{"n": 2, "families": [[1]]}',
    '{"n": 2, "families": [[[1]]',
])
def test_json_errors(payload):
    with pytest.raises(FamilyFileError):
        loads_json(payload)


def test_load_detects_format(tmp_family_file):
    fams = [make_family(2, [[1], [1, 2]])]
    p_json = tmp_family_file(json.dumps({"n": 2, "families": [[[1], [1, 2]]]}), "a.json")
    p_text = tmp_family_file(dumps_text(2, fams), "a.txt")
    assert load(p_json) == (2, fams) == load(p_text)
