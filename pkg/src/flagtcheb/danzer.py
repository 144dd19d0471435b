"""
Mirroring (Danzer, power) complexes over sign vectors.

A face of ``MT`` is a vector over ``{0, +1, -1}`` whose zero positions form
the support of a face of ``T`` (the empty face included).  Faces are ordered
coordinatewise by ``+1 < 0`` and ``-1 < 0``.  A face with ``k`` zeros spans a
``k``-dimensional cube, and that count is its rank throughout this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product
from typing import Iterable, Sequence

from .errors import BadParameter, CellVertexMismatch, GroundSetTooLarge, MixedComplexes
from .poly import F_poly, RatPoly
from .poset import CellPoset, fvector_with_empty, is_k_vertex, support_vector

MAX_MIRROR_VERTICES = 20


@dataclass(frozen=True, order=True)
class SignedFace:
    coords: tuple

    def __post_init__(self):
        if any(c not in (-1, 0, 1) for c in self.coords):
            raise BadParameter(f"sign vector {self.coords} has entries outside {{-1, 0, 1}}")

    @property
    def zeros(self) -> frozenset:
        return frozenset(i for i, c in enumerate(self.coords) if c == 0)

    @property
    def rank(self) -> int:
        return sum(1 for c in self.coords if c == 0)

    def __len__(self):
        return len(self.coords)

    def to_json(self) -> list:
        return list(self.coords)


def signed_leq(a: SignedFace, b: SignedFace) -> bool:
    """``a <= b`` in the componentwise order with ``0`` on top."""
    return all(x == y or y == 0 for x, y in zip(a.coords, b.coords))


def _ground_size(p: CellPoset) -> int:
    vs = p.vertex_set
    n = len(vs)
    if vs != frozenset(range(n)):
        raise BadParameter("mirroring needs vertex labels 0..n-1")
    return n


class MirrorComplex:
    def __init__(self, base: CellPoset, n: int, faces: Iterable[SignedFace]):
        self.base = base
        self.n = n
        self.faces = frozenset(faces)

    def __contains__(self, g) -> bool:
        return g in self.faces

    @cached_property
    def rank_counts(self) -> tuple:
        top = max((g.rank for g in self.faces), default=-1)
        counts = [0] * (top + 1)
        for g in self.faces:
            counts[g.rank] += 1
        return tuple(counts)

    @property
    def dim(self) -> int:
        return len(self.rank_counts) - 1

    def ftilde_poly(self) -> RatPoly:
        """Faces by rank, the empty face excluded."""
        return RatPoly(self.rank_counts)

    def f_poly(self) -> RatPoly:
        """Usual f-polynomial ``sum f_{j-1} x^j`` with the empty face at ``x^0``."""
        return RatPoly((1,) + self.rank_counts)

    def vertices(self) -> list:
        return sorted(g for g in self.faces if g.rank == 0)

    def parallel_classes(self) -> dict:
        out: dict = {}
        for g in self.faces:
            out[g.zeros] = out.get(g.zeros, 0) + 1
        return out


def mirror(p: CellPoset) -> MirrorComplex:
    n = _ground_size(p)
    if n > MAX_MIRROR_VERTICES:
        raise GroundSetTooLarge(f"mirroring {n} vertices exceeds the {MAX_MIRROR_VERTICES} cap")
    patterns = {frozenset()} | {c.support for c in p.cells}
    faces = []
    for zeros in patterns:
        free = [i for i in range(n) if i not in zeros]
        for signs in product((1, -1), repeat=len(free)):
            coords = [0] * n
            for i, s in zip(free, signs):
                coords[i] = s
            faces.append(SignedFace(tuple(coords)))
    return MirrorComplex(p, n, faces)


def mirror_ftilde_by_classes(supports: Iterable[frozenset], n: int) -> RatPoly:
    """``f~(MT)`` from parallel classes alone: ``sum_F 2^(n-|F|) t^|F|``,
    with ``supports`` listing the distinct face supports (``∅`` is added)."""
    pats = {frozenset()} | {frozenset(s) for s in supports}
    top = max(len(s) for s in pats)
    counts = [0] * (top + 1)
    for s in pats:
        counts[len(s)] += 2 ** (n - len(s))
    return RatPoly(counts)


def faces_intersect(faces: Sequence[SignedFace], m: MirrorComplex | None = None):
    """Intersection of faces of one mirroring complex, or ``None`` if empty."""
    if not faces:
        raise BadParameter("need at least one face")
    n = len(faces[0])
    if any(len(g) != n for g in faces) or (m is not None and any(g not in m for g in faces)):
        raise MixedComplexes("faces do not come from one mirroring complex")
    out = []
    for i in range(n):
        signs = {g.coords[i] for g in faces} - {0}
        if len(signs) > 1:
            return None
        out.append(signs.pop() if signs else 0)
    return SignedFace(tuple(out))


def _scaled(p: RatPoly, n: int) -> RatPoly:
    """``2^n p(t/2)``."""
    return RatPoly(c * Fraction(2) ** (n - i) for i, c in enumerate(p.coeffs))


def posetfdanzer_sides(p: CellPoset) -> tuple:
    """``(direct f~(MT), 2^n f~(T, t/2) or 2^n S~(T, t/2), which)``."""
    m = mirror(p)
    if is_k_vertex(p):
        rhs, which = _scaled(RatPoly(fvector_with_empty(p)), m.n), "ftilde"
    else:
        rhs, which = _scaled(RatPoly(support_vector(p)), m.n), "stilde"
    return m.ftilde_poly(), rhs, which


def verify_posetfdanzer(p: CellPoset) -> bool:
    lhs, rhs, _ = posetfdanzer_sides(p)
    return lhs == rhs


def Fpolytodanz_sides(p: CellPoset) -> dict:
    if not is_k_vertex(p):
        raise CellVertexMismatch("every (k-1)-cell must have exactly k vertices")
    m = mirror(p)
    shifted = F_poly(fvector_with_empty(p))(RatPoly((1, 1)))
    scale = 2 ** m.n
    x = RatPoly((0, 1))
    return {
        "ftilde_direct": m.ftilde_poly(),
        "ftilde_formula": scale * shifted,
        "f_direct": m.f_poly(),
        "f_formula": scale * x * shifted + 1,
    }


def verify_Fpolytodanz(p: CellPoset) -> bool:
    s = Fpolytodanz_sides(p)
    return s["ftilde_direct"] == s["ftilde_formula"] and s["f_direct"] == s["f_formula"]


def star_isomorphic(m: MirrorComplex, g: SignedFace) -> bool:
    """Faces above ``g`` map onto ``T`` plus a bottom by taking zero sets;
    check that this map is a bijection and an order isomorphism."""
    p = m.base
    star = [h for h in m.faces if signed_leq(g, h)]
    by_support: dict = {}
    for c in p.cells:
        by_support.setdefault(c.support, []).append(c.id)
    image = {}
    for h in star:
        z = h.zeros
        if z and z not in by_support:
            return False
        image[h] = z
    targets = set(image.values())
    if len(targets) != len(star) or targets != {frozenset()} | set(by_support):
        return False
    if any(len(ids) != 1 for ids in by_support.values()):
        return False
    cell_of = {s: ids[0] for s, ids in by_support.items()}

    def base_leq(a, b):
        if not a:
            return True
        if not b:
            return False
        return p.leq(cell_of[a], cell_of[b])

    for h1 in star:
        for h2 in star:
            if signed_leq(h1, h2) != base_leq(image[h1], image[h2]):
                return False
    return True


def all_stars_isomorphic(m: MirrorComplex) -> bool:
    return all(star_isomorphic(m, g) for g in m.vertices())


def closed_under_intersection(m: MirrorComplex, limit: int | None = None) -> bool:
    faces = sorted(m.faces)
    if limit is not None:
        faces = faces[:limit]
    for i, a in enumerate(faces):
        for b in faces[i:]:
            x = faces_intersect([a, b])
            if x is not None and x not in m:
                return False
    return True
