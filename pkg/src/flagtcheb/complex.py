"""
Abstract simplicial complexes stored by their facets.

Vertices are dense integer labels ``0 .. n_vertices - 1``.  A face is a
``frozenset`` of labels (the ``VertexSet`` of the data model).  The empty
complex ``{∅}`` is representable; the void complex (no faces at all) is not.

Face closure is computed with integer bitmasks, which is why the ground set
is capped at 64 vertices.  Transforms that create vertices allocate them at
the top of the label range:

* ``join(a, b)`` keeps the labels of ``a`` and shifts ``b`` by ``a.n_vertices``;
* ``edge_subdivision(c, e)`` labels the new vertex ``c.n_vertices``.
"""

from __future__ import annotations

import json
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .errors import (
    BadParameter,
    FaceNotPresent,
    GroundSetTooLarge,
    NotAnEdge,
    NotPure,
    ParseError,
)

MAX_VERTICES = 64

VertexSet = frozenset


def _mask(face: Iterable[int]) -> int:
    m = 0
    for v in face:
        m |= 1 << v
    return m


def _unmask(m: int) -> frozenset:
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return frozenset(out)


def _maximal(faces: Iterable[frozenset]) -> frozenset:
    """Keep only the inclusion-maximal members of ``faces``."""
    by_size = sorted(set(faces), key=len, reverse=True)
    kept: list[frozenset] = []
    for f in by_size:
        if not any(f < g for g in kept):
            kept.append(f)
    return frozenset(kept)


def sort_face(face: Iterable[int]) -> tuple:
    return tuple(sorted(face))


class SimplicialComplex:
    """A facet-represented abstract simplicial complex.

    ``faces`` may be any generating family; only the inclusion-maximal members
    are stored.  Passing ``[()]`` (or ``[frozenset()]``) gives the empty
    complex ``{∅}``.
    """

    def __init__(self, n_vertices: int, faces: Iterable[Iterable[int]]):
        if n_vertices < 0:
            raise BadParameter("n_vertices must be nonnegative")
        if n_vertices > MAX_VERTICES:
            raise GroundSetTooLarge(
                f"{n_vertices} vertices exceeds the {MAX_VERTICES}-vertex ceiling"
            )
        fs = [frozenset(f) for f in faces]
        if not fs:
            raise BadParameter("the void complex is not constructible; use [()] for {∅}")
        for f in fs:
            for v in f:
                if not (isinstance(v, int) and 0 <= v < n_vertices):
                    raise BadParameter(f"vertex {v!r} outside ground set [0, {n_vertices})")
        self.n_vertices = n_vertices
        self.facets = _maximal(fs)

    # -- identity -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.n_vertices == other.n_vertices and self.facets == other.facets

    def __hash__(self):
        return hash((self.n_vertices, self.facets))

    def __repr__(self):
        fs = sorted(sort_face(f) for f in self.facets)
        return f"SimplicialComplex(n={self.n_vertices}, facets={fs})"

    # -- face structure -----------------------------------------------------

    @cached_property
    def _face_masks(self) -> frozenset:
        masks = set()
        for f in self.facets:
            m = _mask(f)
            s = m
            while True:
                masks.add(s)
                if s == 0:
                    break
                s = (s - 1) & m
        return frozenset(masks)

    @cached_property
    def faces(self) -> frozenset:
        """All faces, including the empty face."""
        return frozenset(_unmask(m) for m in self._face_masks)

    def __contains__(self, face) -> bool:
        return _mask(face) in self._face_masks

    @property
    def dim(self) -> int:
        return max(len(f) for f in self.facets) - 1

    @cached_property
    def vertices(self) -> frozenset:
        """Labels that actually occur in some face."""
        return frozenset(v for f in self.facets for v in f)

    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) == 1

    def edges(self) -> list:
        return sorted(sort_face(f) for f in self.faces if len(f) == 2)

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "n": self.n_vertices,
            "facets": [list(f) for f in sorted(sort_face(f) for f in self.facets)],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "SimplicialComplex":
        try:
            n = data["n"]
            facets = data["facets"]
        except (KeyError, TypeError) as exc:
            raise ParseError(f"complex JSON needs 'n' and 'facets': {exc}") from None
        if not isinstance(n, int) or not isinstance(facets, list):
            raise ParseError("complex JSON has wrong field types")
        try:
            return cls(n, [list(f) for f in facets])
        except (BadParameter, TypeError) as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def from_json(cls, text: str) -> "SimplicialComplex":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from None
        return cls.from_dict(data)


# ---------------------------------------------------------------------------
# counting


def faces_by_dim(c: SimplicialComplex) -> dict:
    out: dict[int, set] = {}
    for f in c.faces:
        out.setdefault(len(f) - 1, set()).add(f)
    return out


def f_vector(c: SimplicialComplex) -> tuple:
    """``(f_{-1}, f_0, ..., f_{D-1})``."""
    counts = [0] * (c.dim + 2)
    for f in c.faces:
        counts[len(f)] += 1
    return tuple(counts)


def h_vector(f: Sequence[int]) -> tuple:
    d = len(f) - 1
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def f_from_h(h: Sequence[int]) -> tuple:
    """Inverse of :func:`h_vector`."""
    d = len(h) - 1
    return tuple(sum(comb(d - i, k - i) * h[i] for i in range(k + 1)) for k in range(d + 1))


def euler_characteristic(f: Sequence[int]) -> int:
    """Alternating sum ``f_0 - f_1 + ...`` (the empty face is excluded)."""
    return sum((-1) ** i * x for i, x in enumerate(f[1:]))


# ---------------------------------------------------------------------------
# local structure


def link(c: SimplicialComplex, face: Iterable[int]) -> tuple:
    """Link of ``face``, relabelled onto ``0..m-1``.

    Returns ``(complex, labels)`` where ``labels[i]`` is the original label of
    new vertex ``i``.
    """
    face = frozenset(face)
    if face not in c:
        raise FaceNotPresent(f"{sort_face(face)} is not a face")
    raw = [f - face for f in c.facets if face <= f]
    labels = tuple(sorted({v for f in raw for v in f}))
    index = {v: i for i, v in enumerate(labels)}
    return SimplicialComplex(len(labels), [[index[v] for v in f] for f in raw]), labels


def antistar(c: SimplicialComplex, v: int) -> SimplicialComplex:
    """All faces not containing ``v``; the ground set is unchanged."""
    if not 0 <= v < c.n_vertices:
        raise BadParameter(f"vertex {v} outside ground set")
    return SimplicialComplex(c.n_vertices, [f - {v} for f in c.facets])


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    shift = a.n_vertices
    return SimplicialComplex(
        a.n_vertices + b.n_vertices,
        [fa | {v + shift for v in fb} for fa in a.facets for fb in b.facets],
    )


def edge_subdivision(c: SimplicialComplex, e: Iterable[int]) -> SimplicialComplex:
    """Stellar subdivision at edge ``e``; the new vertex is ``c.n_vertices``."""
    e = frozenset(e)
    if len(e) != 2:
        raise NotAnEdge(f"{sort_face(e)} has {len(e)} vertices")
    if e not in c:
        raise FaceNotPresent(f"{sort_face(e)} is not a face")
    a, b = sorted(e)
    v = c.n_vertices
    out = []
    for f in c.facets:
        if e <= f:
            out.append((f - {a}) | {v})
            out.append((f - {b}) | {v})
        else:
            out.append(f)
    return SimplicialComplex(c.n_vertices + 1, out)


# ---------------------------------------------------------------------------
# predicates


def is_flag(c: SimplicialComplex) -> bool:
    """Every clique of the 1-skeleton is a face.

    Checked inductively: a face ``F`` plus a vertex adjacent to all of ``F``
    must again be a face.
    """
    nbrs = {v: set() for v in c.vertices}
    for f in c.faces:
        if len(f) == 2:
            a, b = f
            nbrs[a].add(b)
            nbrs[b].add(a)
    for f in c.faces:
        if not f:
            continue
        common = set.intersection(*(nbrs[v] for v in f))
        for w in common:
            if f | {w} not in c:
                return False
    return True


def is_vertex_decomposable(c: SimplicialComplex) -> bool:
    if not c.is_pure():
        raise NotPure("vertex decomposability is only defined for pure complexes")
    return _vd(c.facets)


_VD_CACHE: dict = {}


def _vd(facets: frozenset) -> bool:
    if len(facets) == 1:
        return True
    hit = _VD_CACHE.get(facets)
    if hit is not None:
        return hit
    result = False
    for v in sorted({v for f in facets for v in f}):
        deletion = _maximal(f - {v} for f in facets)
        # shedding condition: every facet of the deletion is a facet of c
        if not deletion <= facets:
            continue
        lk = frozenset(f - {v} for f in facets if v in f)
        if _vd(lk) and _vd(deletion):
            result = True
            break
    if len(_VD_CACHE) > 200_000:
        _VD_CACHE.clear()
    _VD_CACHE[facets] = result
    return result


# ---------------------------------------------------------------------------
# generators


def simplex(n: int) -> SimplicialComplex:
    """The full simplex on ``n`` vertices (dimension ``n - 1``)."""
    if n < 1:
        raise BadParameter("simplex needs n >= 1")
    return SimplicialComplex(n, [range(n)])


def simplex_boundary(n: int) -> SimplicialComplex:
    """Boundary of the simplex on ``n`` vertices."""
    if n < 2:
        raise BadParameter("simplex boundary needs n >= 2")
    return SimplicialComplex(n, [set(range(n)) - {i} for i in range(n)])


def cycle(n: int) -> SimplicialComplex:
    if n < 3:
        raise BadParameter("cycle needs n >= 3")
    return SimplicialComplex(n, [(i, (i + 1) % n) for i in range(n)])


def cross_polytope_boundary(n: int) -> SimplicialComplex:
    """Boundary of the ``n``-dimensional cross-polytope.

    Vertex ``2i`` is ``+e_{i+1}`` and vertex ``2i + 1`` is ``-e_{i+1}``.
    """
    if n < 1:
        raise BadParameter("cross-polytope needs n >= 1")
    facets = [[2 * i + s for i, s in enumerate(signs)] for signs in _binary(n)]
    return SimplicialComplex(2 * n, facets)


def _binary(n):
    for m in range(2 ** n):
        yield [(m >> i) & 1 for i in range(n)]


def two_points() -> SimplicialComplex:
    return SimplicialComplex(2, [(0,), (1,)])


def suspension(c: SimplicialComplex) -> SimplicialComplex:
    return join(c, two_points())


def empty_complex() -> SimplicialComplex:
    return SimplicialComplex(0, [()])


def path(n_edges: int) -> SimplicialComplex:
    if n_edges < 1:
        raise BadParameter("path needs at least one edge")
    return SimplicialComplex(n_edges + 1, [(i, i + 1) for i in range(n_edges)])


def skeleton(c: SimplicialComplex, k: int) -> SimplicialComplex:
    """Faces of dimension at most ``k``."""
    return SimplicialComplex(
        c.n_vertices, [s for f in c.facets for s in combinations(sorted(f), min(len(f), k + 1))]
    )
