from __future__ import annotations

import pytest
from hypothesis import given, settings

from flagtcheb.complex import (
    SimplicialComplex,
    antistar,
    cross_polytope_boundary,
    cycle,
    edge_subdivision,
    empty_complex,
    euler_characteristic,
    f_from_h,
    f_vector,
    h_vector,
    is_flag,
    is_vertex_decomposable,
    join,
    link,
    path,
    simplex,
    simplex_boundary,
    skeleton,
    suspension,
)
from flagtcheb.errors import BadParameter, FaceNotPresent, GroundSetTooLarge, NotAnEdge

from conftest import complexes


# frozen values


def test_cycle_counts():
    assert f_vector(cycle(5)) == (1, 5, 5)
    assert h_vector(f_vector(cycle(5))) == (1, 3, 1)
    assert h_vector(f_vector(cycle(8))) == (1, 6, 1)


def test_join_of_pentagons():
    c = join(cycle(5), cycle(5))
    assert f_vector(c) == (1, 10, 35, 50, 25)
    assert h_vector(f_vector(c)) == (1, 6, 11, 6, 1)


def test_octahedron():
    c = cross_polytope_boundary(3)
    assert f_vector(c) == (1, 6, 12, 8)
    assert h_vector(f_vector(c)) == (1, 3, 3, 1)
    assert frozenset({0, 1}) not in c


def test_small_constructors():
    assert f_vector(simplex(3)) == (1, 3, 3, 1)
    assert f_vector(simplex_boundary(4)) == (1, 4, 6, 4)
    assert f_vector(path(3)) == (1, 4, 3)
    assert f_vector(empty_complex()) == (1,)
    assert f_vector(suspension(cycle(4))) == (1, 6, 12, 8)


def test_euler_characteristic_excludes_empty_face():
    assert euler_characteristic(f_vector(cycle(7))) == 0
    assert euler_characteristic(f_vector(cross_polytope_boundary(3))) == 2
    assert euler_characteristic(f_vector(simplex(4))) == 1


def test_link_relabels():
    c = join(cycle(4), cycle(4))
    lk, labels = link(c, {0})
    assert labels == (1, 3, 4, 5, 6, 7)
    assert f_vector(lk) == (1, 6, 12, 8)


def test_link_of_missing_face():
    with pytest.raises(FaceNotPresent):
        link(cycle(5), {0, 2})


def test_antistar():
    c = antistar(cycle(5), 0)
    assert f_vector(c) == (1, 4, 3)
    assert c.n_vertices == 5


def test_edge_subdivision_new_vertex():
    c = edge_subdivision(cycle(5), (0, 1))
    assert c == cycle(6) or f_vector(c) == (1, 6, 6)
    assert frozenset({0, 5}) in c and frozenset({1, 5}) in c
    assert frozenset({0, 1}) not in c


def test_edge_subdivision_errors():
    with pytest.raises(NotAnEdge):
        edge_subdivision(cycle(5), (0,))
    with pytest.raises(FaceNotPresent):
        edge_subdivision(cycle(5), (0, 2))


def test_flagness():
    assert is_flag(cycle(4))
    assert not is_flag(simplex_boundary(3))
    assert is_flag(cross_polytope_boundary(4))


def test_vertex_decomposable():
    assert is_vertex_decomposable(cycle(5))
    assert is_vertex_decomposable(cross_polytope_boundary(3))


def test_skeleton():
    assert f_vector(skeleton(simplex(4), 1)) == (1, 4, 6)


def test_guards():
    with pytest.raises(GroundSetTooLarge):
        SimplicialComplex(65, [()])
    with pytest.raises(BadParameter):
        SimplicialComplex(2, [(0, 3)])
    with pytest.raises(BadParameter):
        SimplicialComplex(2, [])


def test_json_round_trip_is_byte_identical():
    c = cycle(5)
    text = c.to_json()
    assert SimplicialComplex.from_json(text).to_json() == text


# properties


@given(complexes())
def test_h_then_f_round_trip(c):
    f = f_vector(c)
    assert f_from_h(h_vector(f)) == f


@given(complexes())
def test_faces_are_closed_under_subsets(c):
    for f in c.faces:
        for v in f:
            assert f - {v} in c


@given(complexes(), complexes(max_vertices=4))
@settings(max_examples=40)
def test_join_multiplies_f_polynomials(a, b):
    fa, fb, fj = f_vector(a), f_vector(b), f_vector(join(a, b))
    prod = [0] * (len(fa) + len(fb) - 1)
    for i, x in enumerate(fa):
        for j, y in enumerate(fb):
            prod[i + j] += x * y
    assert fj == tuple(prod)


@given(complexes())
def test_subdivision_keeps_euler_characteristic(c):
    for e in c.edges()[:3]:
        s = edge_subdivision(c, e)
        assert euler_characteristic(f_vector(s)) == euler_characteristic(f_vector(c))


@given(complexes())
def test_link_antistar_split(c):
    fc = f_vector(c)
    for v in sorted(c.vertices):
        fa, fl = f_vector(antistar(c, v)), f_vector(link(c, {v})[0])
        for i in range(len(fc)):
            a = fa[i] if i < len(fa) else 0
            l = fl[i - 1] if 0 < i <= len(fl) else 0
            assert fc[i] == a + l


@given(complexes())
def test_json_round_trip(c):
    assert SimplicialComplex.from_json(c.to_json()) == c
