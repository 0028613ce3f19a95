import os
import sys

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(__file__))

from binorm.core import Family  # noqa: E402

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


@st.composite
def families(draw, n=None, max_n=5):
    n = draw(st.integers(0, max_n)) if n is None else n
    members = draw(st.sets(st.integers(0, (1 << n) - 1), max_size=1 << n))
    return Family(n, members)


@st.composite
def family_tuples(draw, s=2, max_n=4):
    n = draw(st.integers(0, max_n))
    return [draw(families(n=n)) for _ in range(s)]


def to_sets(fam: Family) -> frozenset:
    return frozenset(frozenset(s) for s in fam.as_sets())


@pytest.fixture
def tmp_family_file(tmp_path):
    def write(text: str, name: str = "fam.txt") -> str:
        p = tmp_path / name
        p.write_text(text)
        return str(p)
    return write
