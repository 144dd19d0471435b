from __future__ import annotations

import sys

from hypothesis import settings
from hypothesis import strategies as st

from flagtcheb.complex import SimplicialComplex

settings.register_profile("default", max_examples=40, deadline=None)
settings.load_profile("default")


@st.composite
def complexes(draw, max_vertices=6, max_facets=6):
    n = draw(st.integers(1, max_vertices))
    facets = draw(
        st.lists(st.frozensets(st.integers(0, n - 1), min_size=1, max_size=n), min_size=1, max_size=max_facets)
    )
    return SimplicialComplex(n, facets)


@st.composite
def symmetric_h(draw, max_half=4, max_entry=30):
    m = draw(st.integers(0, max_half))
    half = draw(st.lists(st.integers(0, max_entry), min_size=m + 1, max_size=m + 1))
    half[0] = 1
    return tuple(half + half[-2::-1]) if m else (1,)


fvectors = st.lists(st.integers(0, 20), min_size=1, max_size=6).map(lambda t: (1,) + tuple(t))


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)
