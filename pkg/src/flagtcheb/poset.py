"""
Graded face posets of cell complexes.

A :class:`CellPoset` stores nonempty faces only.  Each element has a
dimension and a *support*, the set of vertices it spans.  The empty face is
never stored; the two polynomial conventions that depend on it are applied in
:func:`ftilde_poly` according to ``kind``:

* ``simplicial`` -- the empty face is counted at rank 0, so rank = dim + 1;
* ``cubical`` / ``general`` -- the empty face is omitted, rank = dim.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .complex import SimplicialComplex, f_vector, sort_face
from .errors import BadParameter, NonBooleanIntervals, NotGraded, NotPure, ParseError
from .poly import RatPoly

KINDS = ("simplicial", "cubical", "general")


@dataclass(frozen=True)
class Cell:
    id: int
    dim: int
    support: frozenset


class CellPoset:
    """Face poset of a cell complex.

    Element ids are ``0..N-1`` and coincide with list positions.  ``labels``
    optionally names each element (a face tuple, an interval pair, ...).
    """

    def __init__(
        self,
        cells: Sequence[tuple],
        covers: Iterable[tuple],
        kind: str = "general",
        labels: Sequence | None = None,
    ):
        if kind not in KINDS:
            raise BadParameter(f"unknown poset kind {kind!r}")
        self.cells = tuple(
            Cell(i, int(dim), frozenset(support)) for i, (dim, support) in enumerate(cells)
        )
        self.covers = frozenset((int(a), int(b)) for a, b in covers)
        self.kind = kind
        self.labels = tuple(labels) if labels is not None else tuple(range(len(self.cells)))
        if len(self.labels) != len(self.cells):
            raise BadParameter("one label per element required")
        n = len(self.cells)
        for lo, hi in self.covers:
            if not (0 <= lo < n and 0 <= hi < n):
                raise BadParameter(f"cover ({lo}, {hi}) references a missing element")
            if self.cells[hi].dim != self.cells[lo].dim + 1:
                raise BadParameter(f"cover ({lo}, {hi}) does not raise dimension by one")
            if not self.cells[lo].support <= self.cells[hi].support:
                raise BadParameter(f"cover ({lo}, {hi}) is not support-monotone")
        for c in self.cells:
            if c.dim < 0:
                raise BadParameter("dimensions are nonnegative; the empty face is implicit")

    def __len__(self):
        return len(self.cells)

    def __repr__(self):
        return f"CellPoset(kind={self.kind}, elements={len(self.cells)}, covers={len(self.covers)})"

    # -- order --------------------------------------------------------------

    @cached_property
    def _up(self) -> dict:
        up = {i: [] for i in range(len(self.cells))}
        for lo, hi in self.covers:
            up[lo].append(hi)
        return {i: sorted(v) for i, v in up.items()}

    @cached_property
    def down_sets(self) -> tuple:
        """``down_sets[i]`` is the set of elements ``<= i``."""
        down: dict[int, set] = {}
        below = {i: [] for i in range(len(self.cells))}
        for lo, hi in self.covers:
            below[hi].append(lo)
        for c in sorted(self.cells, key=lambda c: c.dim):
            s = {c.id}
            for lo in below[c.id]:
                s |= down[lo]
            down[c.id] = s
        return tuple(frozenset(down[i]) for i in range(len(self.cells)))

    def leq(self, a: int, b: int) -> bool:
        return a in self.down_sets[b]

    def minimal(self) -> list:
        has_lower = {hi for _, hi in self.covers}
        return [c.id for c in self.cells if c.id not in has_lower]

    def maximal(self) -> list:
        has_upper = {lo for lo, _ in self.covers}
        return [c.id for c in self.cells if c.id not in has_upper]

    def is_pure(self) -> bool:
        return len({self.cells[i].dim for i in self.maximal()}) <= 1

    def is_graded(self) -> bool:
        """All maximal chains have the same length."""
        return (
            len({self.cells[i].dim for i in self.minimal()}) <= 1
            and len({self.cells[i].dim for i in self.maximal()}) <= 1
        )

    @property
    def vertex_set(self) -> frozenset:
        return frozenset(v for c in self.cells for v in c.support)

    def dim_counts(self) -> tuple:
        if not self.cells:
            return ()
        top = max(c.dim for c in self.cells)
        counts = [0] * (top + 1)
        for c in self.cells:
            counts[c.dim] += 1
        return tuple(counts)

    def interval(self, u: int, v: int) -> frozenset:
        return frozenset(w for w in self.down_sets[v] if u in self.down_sets[w])

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "elements": [
                {"id": c.id, "dim": c.dim, "support": sorted(c.support)} for c in self.cells
            ],
            "covers": sorted([lo, hi] for lo, hi in self.covers),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "CellPoset":
        try:
            elements = sorted(data["elements"], key=lambda e: e["id"])
            if [e["id"] for e in elements] != list(range(len(elements))):
                raise ParseError("element ids must be 0..N-1")
            return cls(
                [(e["dim"], e["support"]) for e in elements],
                [tuple(c) for c in data["covers"]],
                data.get("kind", "general"),
            )
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad poset JSON: {exc}") from None
        except BadParameter as exc:
            raise ParseError(str(exc)) from None

    @classmethod
    def from_json(cls, text: str) -> "CellPoset":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from None


# ---------------------------------------------------------------------------
# constructors


def from_simplicial(c: SimplicialComplex) -> CellPoset:
    faces = sorted((f for f in c.faces if f), key=lambda f: (len(f), sort_face(f)))
    index = {f: i for i, f in enumerate(faces)}
    covers = [(index[f - {v}], index[f]) for f in faces if len(f) > 1 for v in f]
    return CellPoset(
        [(len(f) - 1, f) for f in faces], covers, "simplicial", [sort_face(f) for f in faces]
    )


def from_relations(n: int, covers: Iterable[tuple], kind: str = "general") -> CellPoset:
    """Poset on ``0..n-1`` from its cover relations.

    Dimension is the length of the longest chain below an element; the
    support of an element is the set of minimal elements beneath it.
    """
    covers = [tuple(c) for c in covers]
    below = {i: [] for i in range(n)}
    for lo, hi in covers:
        below[hi].append(lo)
    dims: dict[int, int] = {}

    def depth(i, seen=()):
        if i in dims:
            return dims[i]
        if i in seen:
            raise BadParameter("cover relation has a cycle")
        dims[i] = max((depth(j, seen + (i,)) + 1 for j in below[i]), default=0)
        return dims[i]

    atoms_below: dict[int, frozenset] = {}

    def atoms(i):
        if i not in atoms_below:
            atoms_below[i] = (
                frozenset({i}) if not below[i] else frozenset().union(*(atoms(j) for j in below[i]))
            )
        return atoms_below[i]

    cells = [(depth(i), atoms(i)) for i in range(n)]
    return CellPoset(cells, covers, kind)


def chain(k: int) -> CellPoset:
    return from_relations(k, [(i, i + 1) for i in range(k - 1)])


def antichain(k: int) -> CellPoset:
    return from_relations(k, [])


def boolean_lattice(n: int) -> CellPoset:
    """All subsets of an ``n``-set, including the empty one, as a poset."""
    subsets = sorted(
        (frozenset(s) for k in range(n + 1) for s in combinations(range(n), k)),
        key=lambda s: (len(s), sort_face(s)),
    )
    index = {s: i for i, s in enumerate(subsets)}
    covers = [(index[s - {v}], index[s]) for s in subsets for v in s]
    p = from_relations(len(subsets), covers)
    return CellPoset(
        [(c.dim, c.support) for c in p.cells], p.covers, "general", [sort_face(s) for s in subsets]
    )


def square_cell() -> CellPoset:
    """A single square: 4 vertices, 4 edges, one 2-cell on all 4 vertices."""
    vertices = [(0, {i}) for i in range(4)]
    edges = [(1, {i, (i + 1) % 4}) for i in range(4)]
    cells = vertices + edges + [(2, {0, 1, 2, 3})]
    covers = [(i, 4 + i) for i in range(4)] + [((i + 1) % 4, 4 + i) for i in range(4)]
    covers += [(4 + i, 8) for i in range(4)]
    return CellPoset(cells, covers, "cubical")


# ---------------------------------------------------------------------------
# transforms


def dual(p: CellPoset) -> CellPoset:
    """Dual complex: a ``j``-cell per ``(D-j-1)``-cell, supported on the facets
    containing it.  Element ids are preserved."""
    if not p.is_pure():
        raise NotPure("duals are only defined for pure cell complexes")
    facets = sorted(p.maximal())
    top = p.cells[facets[0]].dim if facets else 0
    facet_index = {f: i for i, f in enumerate(facets)}
    cells = []
    for c in p.cells:
        support = {facet_index[f] for f in facets if p.leq(c.id, f)}
        cells.append((top - c.dim, support))
    return CellPoset(cells, [(hi, lo) for lo, hi in p.covers], "general", p.labels)


def ftilde_poly(p: CellPoset) -> RatPoly:
    counts = p.dim_counts()
    if p.kind == "simplicial":
        return RatPoly((1,) + counts)
    return RatPoly(counts)


def fvector_with_empty(p: CellPoset) -> tuple:
    """``(1, f_0, f_1, ...)`` counted by dimension, empty face included."""
    return (1,) + p.dim_counts()


def stilde_poly(p: CellPoset) -> RatPoly:
    """Faces counted by support size; the empty face gives the constant 1."""
    return RatPoly(support_vector(p))


def support_vector(p: CellPoset) -> tuple:
    """``(1, s_1, s_2, ...)`` with ``s_i`` the number of cells on ``i`` vertices."""
    top = max((len(c.support) for c in p.cells), default=0)
    counts = [0] * (top + 1)
    counts[0] = 1
    for c in p.cells:
        counts[len(c.support)] += 1
    return tuple(counts)


def is_k_vertex(p: CellPoset) -> bool:
    """Every ``(k-1)``-dimensional cell has exactly ``k`` vertices."""
    return all(len(c.support) == c.dim + 1 for c in p.cells)


def _interval_elements(p: CellPoset) -> list:
    pairs = [(u, v) for v in range(len(p)) for u in sorted(p.down_sets[v])]
    return sorted(pairs, key=lambda uv: (p.cells[uv[1]].dim - p.cells[uv[0]].dim, uv))


def _interval_cells_and_covers(p: CellPoset, pairs: list, offset: int) -> tuple:
    index = {uv: i + offset for i, uv in enumerate(pairs)}
    cells = [
        (p.cells[v].dim - p.cells[u].dim + offset, p.interval(u, v)) for u, v in pairs
    ]
    up = p._up
    down = {i: [] for i in range(len(p))}
    for lo, hi in p.covers:
        down[hi].append(lo)
    covers = []
    for (u, v), i in index.items():
        # growing an interval by one cover at either end
        for x in down[u]:
            covers.append((i, index[(x, v)]))
        for y in up[v]:
            covers.append((i, index[(u, y)]))
    return cells, covers


def interval_poset(p: CellPoset, include_empty: bool = False) -> CellPoset:
    """Nonempty intervals ``[u, v]`` ordered by inclusion.

    With ``include_empty`` an empty interval is adjoined as the bottom
    element and every other dimension shifts up by one.  The support of
    ``[u, v]`` is the set of elements of ``p`` it contains.
    """
    if include_empty and not p.is_graded():
        raise NotGraded("the interval poset with the empty interval needs a graded poset")
    pairs = _interval_elements(p)
    offset = 1 if include_empty else 0
    cells, covers = _interval_cells_and_covers(p, pairs, offset)
    labels = list(pairs)
    if include_empty:
        cells = [(0, frozenset())] + cells
        labels = [None] + labels
        covers += [(0, i + 1) for i, (u, v) in enumerate(pairs) if u == v]
    return CellPoset(cells, covers, "general", labels)


def order_complex(p: CellPoset) -> SimplicialComplex:
    """Chains of ``p`` as a simplicial complex on the element ids."""
    up = p._up
    chains = []

    def extend(path):
        nxt = up[path[-1]]
        if not nxt:
            chains.append(tuple(path))
            return
        for y in nxt:
            extend(path + [y])

    for m in p.minimal():
        extend([m])
    return SimplicialComplex(len(p), chains or [()])


def has_boolean_intervals(p: CellPoset) -> bool:
    for v in range(len(p)):
        for u in p.down_sets[v]:
            if not _is_boolean_interval(p, u, v):
                return False
    return True


def _is_boolean_interval(p: CellPoset, u: int, v: int) -> bool:
    k = p.cells[v].dim - p.cells[u].dim
    elems = p.interval(u, v)
    if len(elems) != 2 ** k:
        return False
    by_rank = [0] * (k + 1)
    for w in elems:
        by_rank[p.cells[w].dim - p.cells[u].dim] += 1
    if by_rank != [comb(k, i) for i in range(k + 1)]:
        return False
    # joins exist and are unique inside the interval
    for a, b in combinations(sorted(elems), 2):
        uppers = [w for w in elems if p.leq(a, w) and p.leq(b, w)]
        least = [w for w in uppers if all(p.leq(w, z) for z in uppers)]
        if len(least) != 1:
            return False
    return True


def barycentric_cover(p: CellPoset) -> CellPoset:
    """Poset of order relations ``u <= v``; a cubical poset when the
    intervals of ``p`` are Boolean."""
    if not has_boolean_intervals(p):
        raise NonBooleanIntervals("barycentric cover needs Boolean intervals")
    pairs = _interval_elements(p)
    cells, covers = _interval_cells_and_covers(p, pairs, 0)
    return CellPoset(cells, covers, "cubical", pairs)


def cubical_barycentric_fvector(f: Sequence[int]) -> tuple:
    """``f_k = sum_{j >= k} C(j+1, k) f_j`` for ``k = 0..D-1``; ``f`` starts
    with ``f_{-1}``."""
    top = len(f) - 2
    return tuple(
        sum(comb(j + 1, k) * f[j + 1] for j in range(k, top + 1)) for k in range(top + 1)
    )


def verify_interval_tcheb(p: CellPoset) -> bool:
    """Face counts of the interval poset's order complex against the
    Tchebyshev triangulation formula applied to the order complex of ``p``."""
    from .subdivide import tcheb_fvector_formula

    lhs = f_vector(order_complex(interval_poset(p)))
    rhs = tcheb_fvector_formula(f_vector(order_complex(p)))
    return lhs == rhs
