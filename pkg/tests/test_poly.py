from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagtcheb.complex import cycle, edge_subdivision, join
from flagtcheb.errors import NotSymmetric, OddDegree
from flagtcheb.poly import (
    F_poly,
    RatPoly,
    X,
    chebyshev_T,
    complex_gamma,
    g_poly,
    gamma_recursion_check,
    gamma_vector,
    link_h_inequality,
    p_poly,
    tcheb_transform,
    verify_gamchebinv,
)

from conftest import symmetric_h

polys = st.lists(st.fractions(max_denominator=6, min_value=-9, max_value=9), max_size=6).map(RatPoly)


def test_chebyshev_values():
    assert chebyshev_T(2) == RatPoly((-1, 0, 2))
    assert chebyshev_T(3) == RatPoly((0, -3, 0, 4))
    assert chebyshev_T(4) == RatPoly((1, 0, -8, 0, 8))


def test_gamma_of_pentagon_and_its_join():
    assert gamma_vector((1, 3, 1)) == (1, 1)
    assert g_poly((1, 3, 1)) == RatPoly((3, 1))
    assert gamma_vector((1, 6, 11, 6, 1)) == (1, 2, 1)
    assert g_poly((1, 6, 11, 6, 1)) == RatPoly((9, 6, 1))
    assert p_poly((1, 6, 11, 6, 1)) == RatPoly((11, 12, 2))


def test_g_of_2w_for_join():
    assert g_poly((1, 6, 11, 6, 1))(RatPoly((0, 2))) == RatPoly((9, 12, 4))


def test_F_poly_of_edge():
    assert F_poly((1, 2, 1)) == RatPoly((Fraction(1, 4), Fraction(1, 2), Fraction(1, 4)))


def test_bad_h_vectors():
    with pytest.raises(OddDegree):
        gamma_vector((1, 3, 3, 1))
    with pytest.raises(NotSymmetric):
        gamma_vector((1, 2, 3))


def test_gamma_recursion_on_cycles():
    for n in range(5, 10):
        assert gamma_recursion_check(cycle(n), (0, 1))
        assert link_h_inequality(cycle(n), (0, 1))
    assert complex_gamma(edge_subdivision(cycle(5), (0, 1))) == complex_gamma(cycle(6))


def test_gamma_recursion_on_join():
    c = join(cycle(5), cycle(5))
    assert gamma_recursion_check(c, (0, 5))
    assert gamma_recursion_check(c, (0, 1))


def test_json_round_trip():
    p = RatPoly((Fraction(1, 3), -2, 0, 5))
    assert RatPoly.from_json(p.to_json()) == p


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * (b * c) == (a * b) * c
    assert a - a == RatPoly()


@given(polys, polys)
def test_composition_is_evaluation(a, b):
    x = Fraction(3, 7)
    assert a(b)(x) == a(b(x))


@given(polys, polys)
def test_tcheb_transform_is_linear(a, b):
    assert tcheb_transform(a + 3 * b) == tcheb_transform(a) + 3 * tcheb_transform(b)


@given(st.integers(0, 6), st.integers(0, 6))
def test_chebyshev_composition(m, n):
    assert chebyshev_T(m)(chebyshev_T(n)) == chebyshev_T(m * n)


@given(symmetric_h())
def test_gamchebinv_on_symmetric_vectors(h):
    assert verify_gamchebinv(h)


@given(symmetric_h())
def test_gamma_expansion_reproduces_h(h):
    d = len(h) - 1
    gam = gamma_vector(h)
    total = RatPoly()
    for i, c in enumerate(gam):
        total = total + c * X ** i * (1 + X) ** (d - 2 * i)
    assert total == RatPoly(h)


@given(symmetric_h())
def test_tcheb_of_P_is_g_of_2u(h):
    assert tcheb_transform(p_poly(h)) == g_poly(h)(2 * X)
