from __future__ import annotations

from itertools import product
from math import comb

import pytest
from hypothesis import given

from flagtcheb.booldecomp import (
    BooleanDecomposition,
    boolean_fvector,
    build_boolean,
    compressed_complex,
    edge_subdiv_genbool,
    find_boolean_decomposition,
    genbool_case,
    glue_boolean,
    is_f_vector,
    kk_upper,
    pieces_partition,
    subdivided_core_is_boolean,
    verify_boolean,
)
from flagtcheb.complex import SimplicialComplex, cycle, edge_subdivision, f_vector, simplex
from flagtcheb.errors import (
    BadParameter,
    BadPartition,
    DimensionTooLarge,
    IncompatibleDecompositions,
    NotAnFVector,
)
from flagtcheb.suites import realizable_fvectors

from conftest import complexes

POINT = SimplicialComplex(1, [(0,)])
EMPTY = SimplicialComplex(0, [()])
EDGE = simplex(2)


def test_boolean_counts():
    assert f_vector(build_boolean(POINT, 2)) == (1, 3, 1)
    assert f_vector(build_boolean(EDGE, 4)) == (1, 6, 11, 6, 1)
    assert boolean_fvector(EMPTY, 4) == (1, 4, 6, 4, 1)


def test_decomposition_errors():
    with pytest.raises(BadParameter):
        BooleanDecomposition(POINT, 3)
    with pytest.raises(DimensionTooLarge):
        build_boolean(EDGE, 2)
    with pytest.raises(BadPartition):
        BooleanDecomposition(POINT, 2, s_labels=(0,), b_labels=(0, 1))


def test_decomposition_json():
    dec = BooleanDecomposition(EDGE, 4)
    assert BooleanDecomposition.from_json(dec.to_json()) == dec


def test_subdivision_pieces_partition():
    for S, d in [(POINT, 2), (EMPTY, 2), (EDGE, 4)]:
        g = build_boolean(S, d)
        dec = BooleanDecomposition(S, d)
        cases = set()
        for e in g.edges():
            cases.add(genbool_case(dec, e))
            assert pieces_partition(edge_subdivision(g, e), edge_subdiv_genbool(g, dec, e), dec)
        if S == EDGE:
            assert cases == {1, 2, 3}


def test_core_edge_breaks_plain_decomposition():
    g = build_boolean(EDGE, 4)
    assert not subdivided_core_is_boolean(g, BooleanDecomposition(EDGE, 4), (0, 1))


def test_glue():
    g, dec = glue_boolean(build_boolean(EDGE, 4), BooleanDecomposition(EDGE, 4),
                          build_boolean(POINT, 2), BooleanDecomposition(POINT, 2))
    assert f_vector(g) == (1, 7, 14, 7, 1)
    assert verify_boolean(g, dec.S, dec.d, dec.s_labels, dec.b_labels)


def test_glue_with_same_d_is_rejected():
    with pytest.raises(IncompatibleDecompositions):
        glue_boolean(build_boolean(POINT, 2), BooleanDecomposition(POINT, 2),
                     build_boolean(POINT, 2), BooleanDecomposition(POINT, 2))


def test_find_decomposition():
    assert find_boolean_decomposition(cycle(4)) is None
    dec = find_boolean_decomposition(build_boolean(POINT, 2))
    assert dec is not None and dec.d == 2


def test_kruskal_katona_values():
    assert is_f_vector((1, 3, 1))
    assert not is_f_vector((1, 2, 2))
    assert is_f_vector((1, 4, 6, 4, 1))
    assert kk_upper(3, 2) == 1
    with pytest.raises(NotAnFVector):
        compressed_complex((1, 2, 2))


def _candidates(n):
    for tail in product(*[range(comb(n, k) + 1) for k in range(1, n + 1)]):
        yield (1,) + tail


def _strip(v):
    v = list(v)
    while len(v) > 1 and v[-1] == 0:
        v.pop()
    return tuple(v)


def test_kruskal_katona_against_enumeration():
    real = realizable_fvectors(5)
    assert len(real) == 95
    for cand in _candidates(5):
        assert is_f_vector(cand) == (_strip(cand) in real), cand


@given(complexes())
def test_compression_realizes(c):
    f = f_vector(c)
    assert is_f_vector(f)
    assert f_vector(compressed_complex(f)) == f


@given(complexes(max_vertices=4, max_facets=3))
def test_boolean_fvector_law(S):
    d = 2 * (S.dim + 1) + 2
    assert f_vector(build_boolean(S, d)) == boolean_fvector(S, d)
