"""
Tchebyshev triangulations of cell complexes.

Vertices of the triangulation are pairs ``(u, v)`` of original vertices with
``u < v`` in a chosen linear order, plus ``(u, TOP)`` for every original
vertex ``u``.  ``TOP`` sits above every vertex and is encoded as ``v=None``.
A set of pairs ``(u_1, v_1), ..., (u_k, v_k)`` listed with increasing second
coordinate is a face when

1. the union of all coordinates (``TOP`` dropped) is the support of a cell, and
2. consecutive pairs satisfy ``u_i == u_{i+1}`` or ``v_i <= u_{i+1}``.

For non-simplicial input the result need not be closed under subsets, so the
face list is returned as a :class:`TchebComplex` rather than a
:class:`~flagtcheb.complex.SimplicialComplex`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import comb
from typing import NamedTuple, Sequence

from .complex import SimplicialComplex
from .errors import BadOrder
from .poly import F_poly, tcheb_transform
from .poset import CellPoset, support_vector


class TchebVertex(NamedTuple):
    u: object
    v: object  # None encodes TOP

    def __repr__(self):
        return f"({self.u!r}, {'TOP' if self.v is None else repr(self.v)})"


@dataclass(frozen=True)
class TchebComplex:
    faces: frozenset
    order: tuple

    def f_vector(self) -> tuple:
        top = max((len(f) for f in self.faces), default=0)
        counts = [0] * (top + 1)
        counts[0] = 1
        for f in self.faces:
            counts[len(f)] += 1
        return tuple(counts)

    @property
    def dim(self) -> int:
        return max((len(f) for f in self.faces), default=0) - 1

    @property
    def vertices(self) -> frozenset:
        return frozenset(x for f in self.faces for x in f)

    def is_subset_closed(self) -> bool:
        faces = self.faces
        for f in faces:
            if len(f) > 1 and any(f - {x} not in faces for x in f):
                return False
        return True

    def to_simplicial(self) -> tuple:
        """``(complex, labels)`` with ``labels[i]`` the pair for vertex ``i``."""
        labels = tuple(sorted(self.vertices, key=_vertex_key(self.order)))
        index = {x: i for i, x in enumerate(labels)}
        return (
            SimplicialComplex(len(labels), [[index[x] for x in f] for f in self.faces] or [()]),
            labels,
        )

    def to_json(self) -> list:
        key = _vertex_key(self.order)
        return sorted(
            [[_enc(x.u), _enc(x.v)] for x in sorted(f, key=key)] for f in self.faces
        )


def _enc(x):
    if x is None:
        return "TOP"
    return list(x) if isinstance(x, tuple) else x


def _vertex_key(order):
    pos = {v: i for i, v in enumerate(order)}
    top = len(order)
    return lambda x: (top if x.v is None else pos[x.v], pos[x.u])


def _sequences(cell: tuple, pos: dict, allowed=None):
    """All admissible pair sequences whose coordinates cover ``cell`` exactly.

    ``cell`` is sorted by ``pos``; ``allowed`` optionally filters midpoint pairs.
    """
    top = len(pos)
    pairs = [TchebVertex(u, None) for u in cell]
    pairs += [
        TchebVertex(a, b) for a, b in combinations(cell, 2) if allowed is None or allowed(a, b)
    ]
    vpos = lambda x: top if x.v is None else pos[x.v]  # noqa: E731
    pairs.sort(key=lambda x: (vpos(x), pos[x.u]))
    target = frozenset(cell)
    out = []

    def grow(seq, covered):
        if covered == target:
            out.append(frozenset(seq))
        if not seq:
            candidates = pairs
        else:
            last = seq[-1]
            lv = vpos(last)
            candidates = [
                x for x in pairs if vpos(x) > lv and (x.u == last.u or lv <= pos[x.u])
            ]
        for x in candidates:
            grow(seq + [x], covered | ({x.u} if x.v is None else {x.u, x.v}))

    grow([], frozenset())
    return out


def tcheb_triangulate(p: CellPoset, order: Sequence | None = None) -> TchebComplex:
    vertices = p.vertex_set
    if order is None:
        order = sorted(vertices)
    order = tuple(order)
    if len(set(order)) != len(order) or set(order) != vertices:
        raise BadOrder("order must list every vertex of the complex exactly once")
    pos = {v: i for i, v in enumerate(order)}
    faces = set()
    for support in {c.support for c in p.cells}:
        cell = tuple(sorted(support, key=pos.__getitem__))
        faces.update(_sequences(cell, pos))
    return TchebComplex(frozenset(faces), order)


def tcheb_fvector_formula(f: Sequence[int]) -> tuple:
    """Face numbers of the Tchebyshev triangulation from those of the input.

    ``f_{k-1}(T) = sum_{j=k}^{2k} f_{j-1} 2^(2k-j-1) (C(k, 2k-j) + C(k-1, 2k-j))``.
    For cell complexes ``f_{j-1}`` must count cells on ``j`` vertices.
    """
    top = len(f) - 1
    out = [1]
    for k in range(1, top + 1):
        total = Fraction(0)
        for j in range(k, min(2 * k, top) + 1):
            total += f[j] * Fraction(2) ** (2 * k - j - 1) * (comb(k, 2 * k - j) + comb(k - 1, 2 * k - j))
        assert total.denominator == 1
        out.append(int(total))
    return tuple(out)


def random_orders(vertices, count: int, seed: int = 0) -> list:
    rng = random.Random(seed)
    base = sorted(vertices)
    orders = []
    for _ in range(count):
        o = list(base)
        rng.shuffle(o)
        orders.append(tuple(o))
    return orders


def verify_tcheb_F_compat(p: CellPoset, n_orders: int = 3, seed: int = 0) -> bool:
    """``T(F_A) == F_{T(A)}`` exactly, and the closed-form face numbers agree
    with direct triangulation under ``n_orders`` random vertex orders."""
    s = support_vector(p)
    formula = tcheb_fvector_formula(s)
    if tcheb_transform(F_poly(s)) != F_poly(formula):
        return False
    for order in random_orders(p.vertex_set, n_orders, seed):
        if tcheb_triangulate(p, order).f_vector() != formula:
            return False
    return True


def one_sided_interval_complex(d, order: Sequence | None = None) -> TchebComplex:
    """Tchebyshev-style faces over a signed unused color complex in which
    midpoint pairs ``(u, v)`` must join vertices of equal sign.

    ``d`` is a :class:`~flagtcheb.balanced.SignedCellComplex`; condition 1 is
    tested with its vertex face criterion.
    """
    vertices = d.vertices
    if order is None:
        order = vertices
    order = tuple(order)
    if len(set(order)) != len(order) or set(order) != set(vertices):
        raise BadOrder("order must list every vertex exactly once")
    pos = {v: i for i, v in enumerate(order)}
    same_sign = lambda a, b: d.sign(a) == d.sign(b)  # noqa: E731
    faces = set()
    for union in d.face_vertex_sets():
        cell = tuple(sorted(union, key=pos.__getitem__))
        faces.update(_sequences(cell, pos, same_sign))
    return TchebComplex(frozenset(faces), order)
