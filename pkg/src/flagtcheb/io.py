"""
Reading and writing complexes, posets and reports, plus the CSV stats table.

Complex names accepted by :func:`parse_complex_name`::

    C5          5-cycle
    X3          boundary of the 3-dimensional cross-polytope
    D4          full simplex on 4 vertices
    B4          boundary of the simplex on 4 vertices
    P3          path with 3 edges
    E           the empty complex {∅}
    sC5, ssC5   one or two suspensions
    C5*C7       join
"""

from __future__ import annotations

import csv
import io as _io
import json
import re
from fractions import Fraction

from .complex import (
    SimplicialComplex,
    cross_polytope_boundary,
    cycle,
    empty_complex,
    f_vector,
    h_vector,
    join,
    path,
    simplex,
    simplex_boundary,
    suspension,
)
from .errors import BadParameter, NotSymmetric, OddDegree, ParseError
from .poly import RatPoly, g_poly, gamma_vector, p_poly
from .poset import CellPoset

_TERM = re.compile(r"^(s*)(C|X|D|B|P)(\d+)$")
_MAKERS = {
    "C": cycle,
    "X": cross_polytope_boundary,
    "D": simplex,
    "B": simplex_boundary,
    "P": path,
}


def parse_complex_name(name: str) -> SimplicialComplex:
    name = name.strip()
    if not name:
        raise ParseError("empty complex name")
    out = None
    for term in name.split("*"):
        term = term.strip()
        if term == "E":
            c = empty_complex()
        else:
            m = _TERM.match(term)
            if not m:
                raise ParseError(f"cannot parse complex name {term!r}")
            try:
                c = _MAKERS[m.group(2)](int(m.group(3)))
            except BadParameter as exc:
                raise ParseError(str(exc)) from None
            for _ in m.group(1):
                c = suspension(c)
        out = c if out is None else join(out, c)
    return out


def load_complex(source: str) -> SimplicialComplex:
    """A complex from a name, a JSON file path, or inline JSON."""
    text = source.strip()
    if text.startswith("{"):
        return SimplicialComplex.from_json(text)
    if text.endswith(".json"):
        try:
            with open(text) as fh:
                return SimplicialComplex.from_json(fh.read())
        except OSError as exc:
            raise ParseError(str(exc)) from None
    return parse_complex_name(text)


def canonical(data) -> str:
    return json.dumps(data, sort_keys=True, separators=(",", ":"))


def to_jsonable(x):
    """Convert package values into plain JSON data."""
    if isinstance(x, RatPoly):
        return x.to_json()
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (frozenset, set)):
        return sorted(to_jsonable(v) for v in x)
    if isinstance(x, (list, tuple)):
        return [to_jsonable(v) for v in x]
    if isinstance(x, dict):
        return {str(k): to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (SimplicialComplex, CellPoset)):
        return x.to_dict()
    if hasattr(x, "to_dict"):
        return x.to_dict()
    return x


def canonicalize_file(text: str) -> str:
    """Canonical form of a complex or poset JSON document."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(str(exc)) from None
    if isinstance(data, dict) and "facets" in data:
        return SimplicialComplex.from_dict(data).to_json()
    if isinstance(data, dict) and "elements" in data:
        return CellPoset.from_dict(data).to_json()
    raise ParseError("unrecognized document: expected a complex or a poset")


# ---------------------------------------------------------------------------
# stats table

STATS_COLUMNS = ("name", "d", "f", "h", "gamma", "g", "P")


def _ints(v) -> str:
    return ",".join(str(x) for x in v)


def _poly_str(p: RatPoly) -> str:
    return ",".join(str(c) for c in p.coeffs)


def stats_row(name: str, c: SimplicialComplex) -> dict:
    f = f_vector(c)
    h = h_vector(f)
    row = {"name": name, "d": len(f) - 1, "f": _ints(f), "h": _ints(h), "gamma": "", "g": "", "P": ""}
    try:
        row["gamma"] = _ints(gamma_vector(h))
        row["g"] = _poly_str(g_poly(h))
        row["P"] = _poly_str(p_poly(h))
    except (OddDegree, NotSymmetric):
        pass
    return row


def stats_csv(rows) -> str:
    buf = _io.StringIO()
    w = csv.DictWriter(buf, fieldnames=STATS_COLUMNS, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()
