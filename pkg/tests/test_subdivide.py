from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from flagtcheb.complex import cycle, f_vector, simplex
from flagtcheb.errors import BadOrder
from flagtcheb.poly import F_poly, tcheb_transform
from flagtcheb.poset import from_simplicial, square_cell, support_vector
from flagtcheb.subdivide import (
    TchebVertex,
    random_orders,
    tcheb_fvector_formula,
    tcheb_triangulate,
    verify_tcheb_F_compat,
)

from conftest import complexes, fvectors


def test_formula_values():
    assert tcheb_fvector_formula((1, 2, 1)) == (1, 3, 2)
    assert tcheb_fvector_formula((1, 3, 3, 1)) == (1, 6, 9, 4)
    assert tcheb_fvector_formula((1, 4, 4, 0, 1)) == (1, 8, 9, 8, 8)


def test_edge_triangulation():
    t = tcheb_triangulate(from_simplicial(simplex(2)), (0, 1))
    assert t.f_vector() == (1, 3, 2)
    assert TchebVertex(0, 1) in t.vertices
    assert TchebVertex(1, None) in t.vertices
    assert t.is_subset_closed()


def test_square_cell_is_not_subset_closed():
    t = tcheb_triangulate(square_cell())
    assert t.f_vector() == (1, 8, 9, 8, 8)
    assert not t.is_subset_closed()


def test_bad_order():
    with pytest.raises(BadOrder):
        tcheb_triangulate(from_simplicial(simplex(2)), (0, 0))
    with pytest.raises(BadOrder):
        tcheb_triangulate(from_simplicial(simplex(2)), (0,))


def test_orders_are_seeded():
    assert random_orders(range(5), 3, 7) == random_orders(range(5), 3, 7)


def test_family_with_orders():
    for p in [from_simplicial(simplex(2)), from_simplicial(simplex(3)), from_simplicial(cycle(5)),
              from_simplicial(cycle(6)), from_simplicial(simplex(4)), square_cell()]:
        assert verify_tcheb_F_compat(p, n_orders=5, seed=1)


def test_triangulation_is_a_complex_with_euler_characteristic():
    t = tcheb_triangulate(from_simplicial(cycle(5)))
    c, labels = t.to_simplicial()
    assert f_vector(c) == (1, 10, 10)
    assert len(labels) == 10


@given(fvectors)
def test_F_compatibility_of_formula(f):
    assert tcheb_transform(F_poly(f)) == F_poly(tcheb_fvector_formula(f))


@given(complexes(max_vertices=5, max_facets=4), st.integers(0, 1000))
def test_direct_count_matches_formula(c, seed):
    p = from_simplicial(c)
    (order,) = random_orders(p.vertex_set, 1, seed)
    t = tcheb_triangulate(p, order)
    assert t.f_vector() == tcheb_fvector_formula(support_vector(p))
    assert t.is_subset_closed()
