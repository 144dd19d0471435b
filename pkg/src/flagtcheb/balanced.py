"""
Balanced colorings and the signed unused color complex.

For a complex ``Γ`` with a proper coloring by ``[D] = {1..D}``, ``C_F`` is
the set of colors not used by ``F``.  Faces of the signed unused color
complex are formal triples ``B ⊆ Q ⊆ C_F`` with ``Q`` nonempty; a triple
with ``|Q| = k`` has dimension ``k - 1``.  Vertices are the triples with
``|Q| = 1``; the sign is ``+`` when ``B = Q`` and ``-`` when ``B = ∅``.

Incidence is ``(F1,Q1,B1) <= (F2,Q2,B2)`` iff ``F1 ⊇ F2``, ``B1 ⊆ B2`` and
``Q1 \\ B1 ⊆ Q2 \\ B2``.  As a cell complex each triple is supported on its
own vertices ``(F, {q}, B ∩ {q})`` for ``q ∈ Q``, so every ``(k-1)``-cell has
``k`` vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb
from typing import Sequence

from .complex import SimplicialComplex, f_vector, sort_face
from .errors import FaceNotPresent, NotBalanced
from .poset import CellPoset


class ColoredComplex:
    """A complex with a proper coloring ``vertex -> 1..D``.

    ``D`` defaults to ``dim + 1``; a larger ``D`` is accepted so that the
    unused-color construction can be run with spare colors.
    """

    def __init__(self, complex: SimplicialComplex, color: dict, D: int | None = None):
        if D is None:
            D = complex.dim + 1
        if D < complex.dim + 1:
            raise NotBalanced(f"{D} colors cannot color a {complex.dim}-dimensional complex")
        missing = complex.vertices - set(color)
        if missing:
            raise NotBalanced(f"vertices {sorted(missing)} have no color")
        for v in complex.vertices:
            if not 1 <= color[v] <= D:
                raise NotBalanced(f"color {color[v]} of vertex {v} outside 1..{D}")
        for f in complex.facets:
            if len({color[v] for v in f}) != len(f):
                raise NotBalanced(f"facet {sort_face(f)} repeats a color")
        self.complex = complex
        self.color = {v: color[v] for v in sorted(complex.vertices)}
        self.D = D

    def __repr__(self):
        return f"ColoredComplex(D={self.D}, complex={self.complex!r}, color={self.color})"

    def colors_of(self, face) -> frozenset:
        return frozenset(self.color[v] for v in face)

    def to_dict(self) -> dict:
        return {
            "complex": self.complex.to_dict(),
            "D": self.D,
            "color": {str(v): c for v, c in self.color.items()},
        }


def find_balanced_coloring(c: SimplicialComplex, D: int | None = None):
    """Proper coloring with ``D`` (default ``dim + 1``) colors, or ``None``.

    Backtracks over vertices in increasing label order, trying colors in
    increasing order, so the answer is deterministic.
    """
    if D is None:
        D = c.dim + 1
    vertices = sorted(c.vertices)
    nbrs = {v: set() for v in vertices}
    for e in c.edges():
        a, b = e
        nbrs[a].add(b)
        nbrs[b].add(a)
    color: dict = {}

    def assign(i):
        if i == len(vertices):
            return True
        v = vertices[i]
        used = {color[w] for w in nbrs[v] if w in color}
        for k in range(1, D + 1):
            if k not in used:
                color[v] = k
                if assign(i + 1):
                    return True
                del color[v]
        return False

    if D < c.dim + 1 or not assign(0):
        return None
    return ColoredComplex(c, dict(color), D)


def unused_colors(g: ColoredComplex, F) -> frozenset:
    F = frozenset(F)
    if F not in g.complex:
        raise FaceNotPresent(f"{sort_face(F)} is not a face")
    return frozenset(range(1, g.D + 1)) - g.colors_of(F)


@dataclass(frozen=True)
class TripleFace:
    F: frozenset
    Q: frozenset
    B: frozenset

    @property
    def dim(self) -> int:
        return len(self.Q) - 1

    def sort_key(self):
        return (len(self.Q), sort_face(self.F), sort_face(self.Q), sort_face(self.B))

    def to_json(self) -> dict:
        return {"F": sort_face(self.F), "Q": sort_face(self.Q), "B": sort_face(self.B)}

    @classmethod
    def from_json(cls, data: dict) -> "TripleFace":
        return cls(frozenset(data["F"]), frozenset(data["Q"]), frozenset(data["B"]))


def triple_leq(a: TripleFace, b: TripleFace) -> bool:
    return a.F >= b.F and a.B <= b.B and (a.Q - a.B) <= (b.Q - b.B)


class SignedCellComplex:
    """The signed unused color complex of a colored complex."""

    def __init__(self, g: ColoredComplex):
        self.g = g
        triples = []
        for F in g.complex.faces:
            C = unused_colors(g, F)
            for k in range(1, len(C) + 1):
                for Q in combinations(sorted(C), k):
                    for r in range(k + 1):
                        for B in combinations(Q, r):
                            triples.append(TripleFace(F, frozenset(Q), frozenset(B)))
        self.triples = tuple(sorted(triples, key=TripleFace.sort_key))
        self.vertices = tuple(t for t in self.triples if len(t.Q) == 1)
        self.triple_set = frozenset(self.triples)
        self._index = {t: i for i, t in enumerate(self.vertices)}

    @property
    def D(self) -> int:
        return self.g.D

    def sign(self, v: TripleFace) -> int:
        return 1 if v.B == v.Q else -1

    @staticmethod
    def color(v: TripleFace) -> int:
        (q,) = v.Q
        return q

    def f_vector(self) -> tuple:
        top = max((len(t.Q) for t in self.triples), default=0)
        counts = [0] * (top + 1)
        counts[0] = 1
        for t in self.triples:
            counts[len(t.Q)] += 1
        return tuple(counts)

    def own_vertices(self, t: TripleFace) -> frozenset:
        return frozenset(TripleFace(t.F, frozenset({q}), t.B & {q}) for q in t.Q)

    def incidence_vertices(self, t: TripleFace) -> frozenset:
        """Every vertex below ``t`` under the triple incidence."""
        return frozenset(v for v in self.vertices if triple_leq(v, t))

    def distinct_vertex_sets(self) -> int:
        """Number of distinct vertex sets among triples under the incidence order."""
        return len({self.incidence_vertices(t) for t in self.triples})

    def as_cell_poset(self) -> CellPoset:
        index = {t: i for i, t in enumerate(self.triples)}
        cells = [(t.dim, {self._index[v] for v in self.own_vertices(t)}) for t in self.triples]
        covers = []
        for t in self.triples:
            if len(t.Q) > 1:
                for q in t.Q:
                    lower = TripleFace(t.F, t.Q - {q}, t.B - {q})
                    covers.append((index[lower], index[t]))
        return CellPoset(cells, covers, "general", [t.to_json() for t in self.triples])

    def face_vertex_sets(self) -> list:
        """All vertex sets accepted by :func:`vertices_form_face`."""
        by_color: dict = {}
        for v in self.vertices:
            by_color.setdefault(self.color(v), []).append(v)
        colors = sorted(by_color)
        out = []
        for k in range(1, self.D + 1):
            for cs in combinations(colors, k):
                for vs in product(*(by_color[c] for c in cs)):
                    if vertices_form_face(self, vs):
                        out.append(frozenset(vs))
        return out


def signed_unused_color_complex(g: ColoredComplex) -> SignedCellComplex:
    if not isinstance(g, ColoredComplex):
        raise NotBalanced("a ColoredComplex is required")
    return SignedCellComplex(g)


def vertices_form_face(d: SignedCellComplex, vs: Sequence[TripleFace]) -> bool:
    """Face criterion on vertex lists.

    The listed colors must be distinct (a face has one vertex per element
    of ``Q``); then either the underlying faces of ``Γ`` share a vertex, or
    their unused colors together cover ``[D]``.
    """
    vs = list(vs)
    if not vs:
        return False
    qs = [d.color(v) for v in vs]
    if len(set(qs)) != len(qs):
        return False
    common = frozenset.intersection(*(v.F for v in vs))
    if common:
        return True
    full = frozenset(range(1, d.D + 1))
    return frozenset().union(*(unused_colors(d.g, v.F) for v in vs)) == full


def vertices_form_face_bruteforce(d: SignedCellComplex, vs: Sequence[TripleFace]) -> bool:
    """Search for a triple ``(F, Q, B)`` spanned by the vertices.

    ``Q`` is the set of vertex colors (one per vertex), ``B`` the colors of
    the positive vertices, and ``F`` a face inside every ``F_i`` whose
    unused colors are exactly the union of the ``C_{F_i}``.
    """
    vs = list(vs)
    if not vs:
        return False
    qs = [d.color(v) for v in vs]
    if len(set(qs)) != len(qs):
        return False
    target = frozenset().union(*(unused_colors(d.g, v.F) for v in vs))
    common = frozenset.intersection(*(v.F for v in vs))
    Q = frozenset(qs)
    B = frozenset(d.color(v) for v in vs if d.sign(v) == 1)
    for r in range(len(common) + 1):
        for F in combinations(sorted(common), r):
            F = frozenset(F)
            if unused_colors(d.g, F) == target and TripleFace(F, Q, B) in d.triple_set:
                return True
    return False


def dgamma_fvector_formula(f: Sequence[int], D: int) -> tuple:
    """``f_{k-1} = 2^k sum_{j=k}^{D} f_{D-j-1} C(j, k)`` for ``k = 1..D``."""

    def fv(i):
        return f[i + 1] if 0 <= i + 1 < len(f) else 0

    out = [1]
    for k in range(1, D + 1):
        out.append(2 ** k * sum(fv(D - j - 1) * comb(j, k) for j in range(k, D + 1)))
    return tuple(out)


# ---------------------------------------------------------------------------
# witness search


def search_balanced_complex(f: Sequence[int], D: int | None = None, max_vertices: int = 6):
    """A balanced complex on ``f_0`` vertices with f-vector ``f``, or ``None``.

    Colors are assigned first (class sizes in nonincreasing order), then faces
    are chosen level by level among colorful sets whose boundary is present.
    """
    f = tuple(f)
    if not f or f[0] != 1:
        return None
    dim = len(f) - 2
    if D is None:
        D = dim + 1
    if dim < 0:
        return ColoredComplex(SimplicialComplex(0, [()]), {}, max(D, 0))
    n = f[1]
    if n > max_vertices or D < dim + 1 or D < 1:
        return None
    for sizes in _class_sizes(n, D):
        color = {}
        v = 0
        for c, s in enumerate(sizes, start=1):
            for _ in range(s):
                color[v] = c
                v += 1
        found = _choose_levels(f, color, n)
        if found is not None:
            return ColoredComplex(SimplicialComplex(n, found), color, D)
    return None


def _class_sizes(n, D):
    def parts(rest, k, cap):
        if k == 0:
            if rest == 0:
                yield ()
            return
        for s in range(min(rest, cap), -1, -1):
            for tail in parts(rest - s, k - 1, s):
                yield (s,) + tail

    yield from parts(n, D, n)


def _choose_levels(f, color, n):
    levels = [[frozenset({v}) for v in range(n)]]

    def rec(k):
        if k == len(f):
            return True
        below = set(levels[-1])
        candidates = [
            frozenset(s)
            for s in combinations(range(n), k)
            if len({color[v] for v in s}) == k and all(frozenset(s) - {v} in below for v in s)
        ]
        need = f[k]
        if len(candidates) < need:
            return False
        for pick in combinations(candidates, need):
            levels.append(list(pick))
            if rec(k + 1):
                return True
            levels.pop()
        return False

    # f[1] counts vertices, f[k] counts (k-1)-faces on k vertices
    if not rec(2):
        return None
    return [face for level in levels for face in level]


def colored_fvector(g: ColoredComplex) -> tuple:
    return f_vector(g.complex)
