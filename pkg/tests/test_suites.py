from __future__ import annotations

import pytest

from flagtcheb.balanced import find_balanced_coloring
from flagtcheb.booldecomp import compressed_complex
from flagtcheb.complex import SimplicialComplex, cycle, join, simplex
from flagtcheb.errors import ConfigOutOfBounds, GammaMismatch, NotBalanced, UnknownSuite
from flagtcheb.poly import RatPoly
from flagtcheb.suites import (
    Config,
    danzinput_lhs,
    exit_code,
    gamma_to_g_expansion_check,
    run_suite,
    simpgamdanz_compare,
)

POINT = SimplicialComplex(1, [(0,)])


def test_lhs_hand_value():
    assert danzinput_lhs((1, 3, 1), (1, 3, 1)) == RatPoly((1, 2))


def test_expansion_check():
    assert gamma_to_g_expansion_check(cycle(5), POINT)
    assert gamma_to_g_expansion_check(join(cycle(5), cycle(5)), simplex(2))
    assert gamma_to_g_expansion_check(join(cycle(5), cycle(5)), compressed_complex((1, 2, 1)))
    with pytest.raises(GammaMismatch):
        gamma_to_g_expansion_check(cycle(5), simplex(2))


def test_compare_single_vertex():
    r = simpgamdanz_compare(cycle(5), find_balanced_coloring(simplex(1)))
    assert r["lhs_w"] == RatPoly((1, 1))
    assert r["F_T_direct"] == RatPoly((0, 1))
    assert r["F_eq_mirror"] and r["F_direct_eq_formula"]
    assert not r["lhs_eq_F"]
    assert r["constant_delta"] == 1


def test_compare_needs_coloring():
    with pytest.raises(NotBalanced):
        simpgamdanz_compare(cycle(5), cycle(4))


def test_unknown_and_bounds():
    with pytest.raises(UnknownSuite):
        run_suite("nope")
    with pytest.raises(ConfigOutOfBounds):
        run_suite("gamcheb", Config(max_n=3))


def test_exit_codes():
    hard = {"kind": "hard", "passed": True}
    assert exit_code([hard]) == 0
    assert exit_code([hard, {"kind": "comparison", "passed": False}]) == 2
    assert exit_code([{"kind": "hard", "passed": False}, {"kind": "comparison", "passed": False}]) == 1


@pytest.mark.parametrize("name", ["gamcheb", "tchebF", "danzer", "interval", "booldecomp", "balanced"])
def test_hard_suites_pass(name):
    r = run_suite(name, Config(max_n=8))
    assert r["passed"], [c["input"] for c in r["cases"] if not all(ch["holds"] for ch in c["checks"])]
