from __future__ import annotations

import pytest
from hypothesis import assume, given

from flagtcheb.complex import cross_polytope_boundary, cycle, f_vector, simplex
from flagtcheb.errors import NonBooleanIntervals, NotPure
from flagtcheb.poly import RatPoly
from flagtcheb.poset import (
    CellPoset,
    antichain,
    barycentric_cover,
    boolean_lattice,
    chain,
    cubical_barycentric_fvector,
    dual,
    from_relations,
    from_simplicial,
    ftilde_poly,
    has_boolean_intervals,
    interval_poset,
    is_k_vertex,
    order_complex,
    square_cell,
    stilde_poly,
    support_vector,
    verify_interval_tcheb,
)

from conftest import complexes


def test_pentagon_face_poset():
    p = from_simplicial(cycle(5))
    assert len(p) == 10
    assert len(p.covers) == 10
    assert ftilde_poly(p) == RatPoly((1, 5, 5))
    assert p.is_graded()


def test_duals():
    assert ftilde_poly(dual(from_simplicial(cycle(5)))) == RatPoly((5, 5))
    assert ftilde_poly(dual(from_simplicial(simplex(2)))) == RatPoly((1, 2))
    assert ftilde_poly(dual(from_simplicial(cross_polytope_boundary(3)))) == RatPoly((8, 12, 6))


def test_dual_needs_purity():
    p = from_relations(3, [(0, 1)])
    with pytest.raises(NotPure):
        dual(p)


def test_square_cell_supports():
    p = square_cell()
    assert support_vector(p) == (1, 4, 4, 0, 1)
    assert stilde_poly(p) == RatPoly((1, 4, 4, 0, 1))
    assert ftilde_poly(p) == RatPoly((4, 4, 1))
    assert not is_k_vertex(p)


def test_boolean_lattice_intervals():
    b = boolean_lattice(2)
    assert len(b) == 4
    assert len(interval_poset(b)) == 9
    assert has_boolean_intervals(b)


def test_chain_and_antichain():
    assert len(interval_poset(chain(3))) == 6
    assert len(interval_poset(antichain(2))) == 2
    assert f_vector(order_complex(chain(4))) == (1, 4, 6, 4, 1)
    assert f_vector(order_complex(interval_poset(chain(4)))) == (1, 10, 25, 24, 8)


def test_barycentric_cover_values():
    assert barycentric_cover(from_simplicial(simplex(2))).dim_counts() == (3, 2)
    assert barycentric_cover(from_simplicial(simplex(3))).dim_counts() == (7, 9, 3)
    assert cubical_barycentric_fvector((1, 2, 1)) == (3, 2)
    assert cubical_barycentric_fvector((1, 3, 3, 1)) == (7, 9, 3)


def test_non_boolean_intervals():
    # a bowtie of rank 2 with three elements between bottom and top
    p = from_relations(5, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 4), (3, 4)])
    assert not has_boolean_intervals(p)
    with pytest.raises(NonBooleanIntervals):
        barycentric_cover(p)


def test_interval_identity_small_family():
    for p in [chain(1), chain(2), chain(3), chain(4), boolean_lattice(2),
              from_simplicial(simplex(2)), from_simplicial(simplex(3)), from_simplicial(cycle(4))]:
        assert verify_interval_tcheb(p)


def test_json_round_trip():
    p = square_cell()
    assert CellPoset.from_json(p.to_json()).to_json() == p.to_json()


@given(complexes(max_vertices=5, max_facets=4))
def test_interval_identity_random(c):
    assume(c.dim <= 2)
    assert verify_interval_tcheb(from_simplicial(c))


@given(complexes(max_vertices=5, max_facets=4))
def test_barycentric_cover_formula_random(c):
    p = from_simplicial(c)
    assert barycentric_cover(p).dim_counts() == cubical_barycentric_fvector(f_vector(c))


@given(complexes())
def test_face_poset_counts(c):
    assert ftilde_poly(from_simplicial(c)) == RatPoly(f_vector(c))
