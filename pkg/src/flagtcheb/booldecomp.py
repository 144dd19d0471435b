"""
Boolean decompositions ``Γ = {F ∪ G : F ∈ S, G ⊆ [d - 2|F|]}``.

``S`` lives on its own labels ``0..s-1`` and ``[d] = {1..d}`` is a separate
Boolean ground set.  A :class:`BooleanDecomposition` records where both land
inside ``Γ``: ``s_labels[i]`` is the label of core vertex ``i`` and
``b_labels[j - 1]`` the label of Boolean element ``j``.  The default layout
puts the core first and the Boolean elements after it.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations, permutations
from math import comb
from typing import Iterable, Sequence

from .complex import SimplicialComplex, edge_subdivision, f_vector, sort_face
from .errors import (
    BadParameter,
    BadPartition,
    DimensionTooLarge,
    FaceNotPresent,
    IncompatibleDecompositions,
    NotAComplex,
    NotAnEdge,
    NotAnFVector,
    ParseError,
)


@dataclass(frozen=True)
class BooleanDecomposition:
    S: SimplicialComplex
    d: int
    s_labels: tuple = None
    b_labels: tuple = None

    def __post_init__(self):
        if self.d < 0 or self.d % 2:
            raise BadParameter(f"d = {self.d} must be a nonnegative even integer")
        s = self.S.n_vertices
        if self.s_labels is None:
            object.__setattr__(self, "s_labels", tuple(range(s)))
        if self.b_labels is None:
            object.__setattr__(self, "b_labels", tuple(range(s, s + self.d)))
        object.__setattr__(self, "s_labels", tuple(self.s_labels))
        object.__setattr__(self, "b_labels", tuple(self.b_labels))
        if len(self.s_labels) != s or len(self.b_labels) != self.d:
            raise BadPartition("partition sizes do not match |V(S)| and d")
        if len(set(self.s_labels) | set(self.b_labels)) != s + self.d:
            raise BadPartition("core and Boolean labels overlap")

    @property
    def n_labels(self) -> int:
        return max(self.s_labels + self.b_labels, default=-1) + 1

    def role(self, label: int):
        """``("S", i)`` or ``("B", j)`` for a label of Γ."""
        if label in self.s_labels:
            return ("S", self.s_labels.index(label))
        if label in self.b_labels:
            return ("B", self.b_labels.index(label) + 1)
        raise BadPartition(f"label {label} is in neither part")

    def to_dict(self) -> dict:
        return {
            "S": self.S.to_dict(),
            "d": self.d,
            "vertex_partition": {"S": list(self.s_labels), "boolean": list(self.b_labels)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_dict(cls, data: dict) -> "BooleanDecomposition":
        try:
            part = data.get("vertex_partition") or {}
            return cls(
                SimplicialComplex.from_dict(data["S"]),
                data["d"],
                part.get("S"),
                part.get("boolean"),
            )
        except (KeyError, TypeError, AttributeError) as exc:
            raise ParseError(f"bad decomposition JSON: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> "BooleanDecomposition":
        try:
            return cls.from_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise ParseError(str(exc)) from None


def _boolean_faces(dec: BooleanDecomposition) -> set:
    out = set()
    for F in dec.S.faces:
        core = frozenset(dec.s_labels[v] for v in F)
        room = dec.d - 2 * len(F)
        for r in range(room + 1):
            for G in combinations(dec.b_labels[:room], r):
                out.add(core | frozenset(G))
    return out


def build_boolean(S: SimplicialComplex, d: int, dec: BooleanDecomposition | None = None):
    """The complex ``{F ∪ G}`` in the labels of ``dec`` (default layout)."""
    if dec is None:
        dec = BooleanDecomposition(S, d)
    if any(2 * len(F) > d for F in S.facets):
        raise DimensionTooLarge(f"dim S = {S.dim} exceeds d/2 - 1 = {d // 2 - 1}")
    faces = _boolean_faces(dec)
    gamma = SimplicialComplex(dec.n_labels, faces)
    if gamma.faces != faces:
        raise NotAComplex("the face set {F ∪ G} is not closed under subsets")
    return gamma


def boolean_fvector(S: SimplicialComplex, d: int) -> tuple:
    """``f_{k-1} = sum_F C(d - 2|F|, k - |F|)``."""
    top = d
    out = []
    for k in range(top + 1):
        out.append(sum(comb(d - 2 * len(F), k - len(F)) for F in S.faces if k >= len(F)))
    while len(out) > 1 and out[-1] == 0:
        out.pop()
    return tuple(out)


def verify_boolean(gamma: SimplicialComplex, S: SimplicialComplex, d: int,
                   s_labels=None, b_labels=None) -> bool:
    dec = BooleanDecomposition(S, d, s_labels, b_labels)
    labels = set(dec.s_labels) | set(dec.b_labels)
    if any(not 0 <= x < gamma.n_vertices for x in labels):
        raise BadPartition("partition uses labels outside the ground set of Γ")
    if not gamma.vertices <= labels:
        raise BadPartition("partition does not cover every vertex of Γ")
    if any(2 * len(F) > d for F in S.facets):
        return False
    return _boolean_faces(dec) == set(gamma.faces)


def find_boolean_decomposition(gamma: SimplicialComplex, d: int | None = None, max_vertices: int = 10):
    """Exhaustive search; ``S`` is forced to be the induced complex on the
    non-Boolean vertices.  Returns a decomposition or ``None``."""
    if d is None:
        d = gamma.dim + 1
    if d % 2 or d < 0:
        return None
    verts = sorted(gamma.vertices)
    if len(verts) > max_vertices:
        raise BadParameter(f"exhaustive search is capped at {max_vertices} vertices")
    if d > len(verts):
        return None
    for boolean in permutations(verts, d):
        rest = [v for v in verts if v not in boolean]
        index = {v: i for i, v in enumerate(rest)}
        core = [
            [index[v] for v in f] for f in gamma.faces if not (f & set(boolean))
        ]
        S = SimplicialComplex(len(rest), core)
        if verify_boolean(gamma, S, d, tuple(rest), tuple(boolean)):
            return BooleanDecomposition(S, d, tuple(rest), tuple(boolean))
    return None


# ---------------------------------------------------------------------------
# Kruskal-Katona


def _colex_key(s):
    return tuple(sorted(s, reverse=True))


def kk_cascade(m: int, k: int) -> list:
    """``m = C(a_k, k) + C(a_{k-1}, k-1) + ...`` with ``a_k > a_{k-1} > ...``."""
    out = []
    while m > 0 and k > 0:
        a = k
        while comb(a + 1, k) <= m:
            a += 1
        out.append((a, k))
        m -= comb(a, k)
        k -= 1
    return out


def kk_upper(m: int, k: int) -> int:
    """Most ``(k+1)``-sets whose ``k``-subsets fit among ``m`` given ``k``-sets."""
    return sum(comb(a, i + 1) for a, i in kk_cascade(m, k))


def is_f_vector(f: Sequence) -> bool:
    f = list(f)
    if not f or f[0] != 1:
        return False
    if any(not isinstance(x, int) or x < 0 for x in f):
        return False
    for k in range(1, len(f) - 1):
        if f[k + 1] > kk_upper(f[k], k):
            return False
    return True


def compressed_complex(f: Sequence[int]) -> SimplicialComplex:
    """Colex-initial faces: the first ``f_{k-1}`` ``k``-subsets at every level."""
    f = list(f)
    if not f or f[0] != 1 or any(not isinstance(x, int) or x < 0 for x in f):
        raise NotAnFVector(f"{tuple(f)} is not an f-vector")
    n = f[1] if len(f) > 1 else 0
    chosen = [frozenset()]
    below = {frozenset()}
    for k in range(1, len(f)):
        if f[k] > comb(n, k):
            raise NotAnFVector(f"{tuple(f)}: too many {k}-sets on {n} vertices")
        level = sorted(combinations(range(n), k), key=_colex_key)[: f[k]]
        level = [frozenset(s) for s in level]
        for s in level:
            if any(s - {v} not in below for v in s):
                raise NotAnFVector(f"{tuple(f)} violates the Kruskal-Katona bound")
        chosen += level
        below = set(level)
    return SimplicialComplex(n, chosen)


# ---------------------------------------------------------------------------
# gluing


def glue_boolean(gamma1: SimplicialComplex, dec1: BooleanDecomposition,
                 gamma2: SimplicialComplex, dec2: BooleanDecomposition):
    """``Γ1 ∪ (Γ2 * u)`` together with the decomposition with core
    ``S1 ∪ (S2 * u)``.

    ``Γ2`` must be decomposed with ``d2 = d1 - 2``, so that adding ``u`` to the
    core costs exactly the two Boolean slots it frees.  When ``S2`` is not a
    subcomplex of ``S1`` on shared labels but ``f(S2) <= f(S1)``, both cores
    are replaced by their compressed complexes.
    """
    for g, dec in ((gamma1, dec1), (gamma2, dec2)):
        try:
            ok = verify_boolean(g, dec.S, dec.d, dec.s_labels, dec.b_labels)
        except BadPartition as exc:
            raise IncompatibleDecompositions(str(exc)) from None
        if not ok:
            raise IncompatibleDecompositions("an input decomposition does not verify")
    d = dec1.d
    if dec2.d != d - 2:
        raise IncompatibleDecompositions(
            f"Γ2 must be decomposed with d - 2 = {d - 2}, got {dec2.d}"
        )
    S1, S2 = dec1.S, dec2.S
    f1, f2 = f_vector(S1), f_vector(S2)
    contained = S2.n_vertices <= S1.n_vertices and all(F in S1 for F in S2.facets)
    if not contained:
        padded = list(f2) + [0] * max(0, len(f1) - len(f2))
        if len(padded) > len(f1) or any(a > b for a, b in zip(padded, f1)):
            raise IncompatibleDecompositions("S2 does not fit inside S1 even after compression")
        S1, S2 = compressed_complex(f1), compressed_complex(f2)
    s = S1.n_vertices
    u = s
    core = SimplicialComplex(s + 1, list(S1.facets) + [F | {u} for F in S2.facets])
    dec = BooleanDecomposition(core, d)
    gamma = build_boolean(core, d, dec)
    # the same complex assembled as Γ1 ∪ (Γ2 * u), in the output labels
    base1 = BooleanDecomposition(S1, d, dec.s_labels[:s], dec.b_labels)
    base2 = BooleanDecomposition(S2, d - 2, dec.s_labels[: S2.n_vertices], dec.b_labels[: d - 2])
    glued = _boolean_faces(base1) | {F | {dec.s_labels[u]} for F in _boolean_faces(base2)}
    if glued != set(gamma.faces) or not verify_boolean(gamma, core, d):
        raise IncompatibleDecompositions("glued complex fails verification")
    return gamma, dec


# ---------------------------------------------------------------------------
# generalized decompositions after an edge subdivision


@dataclass(frozen=True)
class GenBoolPiece:
    """Faces ``F ∪ G ∪ extra`` with ``F`` in ``core`` and ``G`` a subset of the
    Boolean prefix ``[d - 2|F| - shrink]`` that avoids ``avoid`` and does not
    contain all of ``not_both``.  ``core`` and ``extra`` use labels of Γ'."""

    label: str
    core_kind: str
    core: tuple
    shrink: int = 0
    avoid: frozenset = field(default_factory=frozenset)
    not_both: frozenset = field(default_factory=frozenset)
    extra: frozenset = field(default_factory=frozenset)

    def faces(self, dec: BooleanDecomposition):
        d = dec.d
        for F in self.core:
            room = d - 2 * len(F) - self.shrink
            if room < 0:
                continue
            pool = [j for j in range(1, room + 1) if j not in self.avoid]
            for r in range(len(pool) + 1):
                for G in combinations(pool, r):
                    if self.not_both and self.not_both <= set(G):
                        continue
                    yield frozenset(F) | {dec.b_labels[j - 1] for j in G} | self.extra

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "core_kind": self.core_kind,
            "core": sorted(sort_face(F) for F in self.core),
            "shrink": self.shrink,
            "avoid": sorted(self.avoid),
            "not_both": sorted(self.not_both),
            "extra": sorted(self.extra),
        }


def edge_subdiv_genbool(gamma: SimplicialComplex, dec: BooleanDecomposition, e) -> list:
    """Pieces of a generalized Boolean decomposition of the subdivision of
    ``gamma`` at ``e``; the new vertex is ``gamma.n_vertices``.

    The returned pieces are checked to partition the subdivided complex.
    """
    e = frozenset(e)
    if len(e) != 2:
        raise NotAnEdge(f"{sort_face(e)} has {len(e)} vertices")
    if e not in gamma:
        raise FaceNotPresent(f"{sort_face(e)} is not a face")
    if not verify_boolean(gamma, dec.S, dec.d, dec.s_labels, dec.b_labels):
        raise BadPartition("the decomposition does not describe gamma")
    v = gamma.n_vertices
    d = dec.d
    lab = lambda F: frozenset(dec.s_labels[x] for x in F)  # noqa: E731
    S_faces = sorted(dec.S.faces, key=lambda F: (len(F), sort_face(F)))
    x, y = sorted(e)
    rx, ry = dec.role(x), dec.role(y)
    pieces = []
    if rx[0] == "B" and ry[0] == "B":
        a, b = sorted((rx[1], ry[1]))
        pieces.append(GenBoolPiece("unchanged", "S", tuple(lab(F) for F in S_faces),
                                   not_both=frozenset({a, b})))
        pieces.append(GenBoolPiece(
            "through v", "faces of S with b <= d - 2|F|",
            tuple(lab(F) for F in S_faces if b <= d - 2 * len(F)),
            not_both=frozenset({a, b}), extra=frozenset({v}),
        ))
    elif rx[0] == "B" or ry[0] == "B":
        (_, a), (_, b) = (ry, rx) if rx[0] == "B" else (rx, ry)
        pieces.append(GenBoolPiece("avoiding a", "antistar of a in S",
                                   tuple(lab(F) for F in S_faces if a not in F)))
        pieces.append(GenBoolPiece("through a, avoiding b", "open star of a in S",
                                   tuple(lab(F) for F in S_faces if a in F),
                                   avoid=frozenset({b})))
        pieces.append(GenBoolPiece(
            "through a and v", "open star of a in S with b <= d - 2|F|",
            tuple(lab(F) for F in S_faces if a in F and b <= d - 2 * len(F)),
            avoid=frozenset({b}), extra=frozenset({v}),
        ))
        pieces.append(GenBoolPiece(
            "through v, not a", "link of a in S with b <= d - 2|F| - 2",
            tuple(lab(F) for F in S_faces
                  if a not in F and (F | {a}) in dec.S and b <= d - 2 * len(F) - 2),
            shrink=2, extra=frozenset({v}),
        ))
    else:
        a, b = rx[1], ry[1]
        ab = frozenset({a, b})
        pieces.append(GenBoolPiece("not containing e", "faces of S not containing e",
                                   tuple(lab(F) for F in S_faces if not ab <= F)))
        pieces.append(GenBoolPiece(
            "through v and one of a, b", "open star of v in S' meeting e",
            tuple(lab(F) for F in S_faces if len(F & ab) == 1 and (F | ab) in dec.S),
            shrink=2, extra=frozenset({v}),
        ))
        pieces.append(GenBoolPiece(
            "through v, missing a and b", "open star of v in S' missing e",
            tuple(lab(F) for F in S_faces if not F & ab and (F | ab) in dec.S),
            shrink=4, extra=frozenset({v}),
        ))
    sub = edge_subdivision(gamma, e)
    if not pieces_partition(sub, pieces, dec):
        raise IncompatibleDecompositions("pieces do not partition the subdivision")
    return pieces


def pieces_partition(sub: SimplicialComplex, pieces: Iterable[GenBoolPiece],
                     dec: BooleanDecomposition) -> bool:
    seen = set()
    for p in pieces:
        for face in p.faces(dec):
            if face in seen:
                return False
            seen.add(face)
    return seen == set(sub.faces)


def genbool_case(dec: BooleanDecomposition, e) -> int:
    """1: both ends Boolean; 2: one end in the core; 3: both in the core."""
    kinds = sorted(dec.role(x)[0] for x in e)
    return {("B", "B"): 1, ("B", "S"): 2, ("S", "S"): 3}[tuple(kinds)]


def subdivided_core_is_boolean(gamma: SimplicialComplex, dec: BooleanDecomposition, e) -> bool:
    """Whether subdividing a core edge gives ``B(S', d)`` for the subdivided core."""
    e = frozenset(e)
    core_edge = frozenset(dec.role(x)[1] for x in e)
    S2 = edge_subdivision(dec.S, core_edge)
    s = dec.S.n_vertices
    v = gamma.n_vertices
    dec2 = BooleanDecomposition(S2, dec.d, dec.s_labels + (v,), dec.b_labels)
    return _boolean_faces(dec2) == set(edge_subdivision(gamma, e).faces) and s + 1 == S2.n_vertices
