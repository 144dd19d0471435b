"""Acceptance criteria, one check per criterion.

Run with pytest (a pass/fail line per criterion is printed in the terminal
summary) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import sys
from functools import lru_cache

import pytest

from flagtcheb.balanced import (
    dgamma_fvector_formula,
    find_balanced_coloring,
    signed_unused_color_complex,
    unused_colors,
    vertices_form_face,
)
from flagtcheb.complex import cross_polytope_boundary, f_vector, h_vector
from flagtcheb.poly import RatPoly, g_poly, gamma_vector
from flagtcheb.subdivide import tcheb_fvector_formula
from flagtcheb.suites import Config, danzinput_lhs, run_suite

RESULTS: dict = {}


@lru_cache(maxsize=None)
def report(name):
    return run_suite(name, Config(max_n=12, seed=0))


def checks(name, where=lambda case: True, identity=None):
    out = []
    for case in report(name)["cases"]:
        if where(case):
            for ch in case["checks"]:
                if identity is None or identity in ch["identity"]:
                    out.append((case["input"], ch))
    return out


def all_hold(items):
    return bool(items) and all(ch["holds"] for _, ch in items)


def c01_gamcheb():
    r = report("gamcheb")
    names = {c["input"] for c in r["cases"]}
    need = {f"C{n}" for n in range(4, 13)} | {"C5*C5", "C5*C7", "X2", "X4", "X6", "ss(C5)", "ss(C5*C5)"}
    spots = (
        gamma_vector((1, 3, 1)) == (1, 1)
        and g_poly((1, 3, 1)) == RatPoly((3, 1))
        and gamma_vector((1, 6, 11, 6, 1)) == (1, 2, 1)
        and g_poly((1, 6, 11, 6, 1)) == RatPoly((9, 6, 1))
    )
    return need <= names and all_hold(checks("gamcheb", identity="gamma(u) = u^m")) and spots


def c02_tcheb_of_P():
    return all_hold(checks("gamcheb", identity="T(P)(u) = g(2u)"))


def c03_tchebF():
    items = checks("tchebF", identity="direct count = formula")
    per_input = {}
    for name, _ in items:
        per_input[name] = per_input.get(name, 0) + 1
    family = {"edge", "triangle", "C5", "C6", "tetrahedron", "square cell"}
    return (
        set(per_input) == family
        and all(v == 5 for v in per_input.values())
        and all_hold(items)
        and all_hold(checks("tchebF", identity="T(F_A) = F_T(A)"))
        and tcheb_fvector_formula((1, 2, 1)) == (1, 3, 2)
        and tcheb_fvector_formula((1, 3, 3, 1)) == (1, 6, 9, 4)
    )


def c04_danzer():
    k_vertex = lambda c: c["input"] != "square cell"  # noqa: E731
    return (
        all_hold(checks("danzer", k_vertex, "2^n f~(T, t/2)"))
        and all_hold(checks("danzer", lambda c: not k_vertex(c), "2^n S~(T, t/2)"))
        and all_hold(checks("danzer", identity="(16, 32, 16)"))
        and all_hold(checks("danzer", identity="star of every vertex"))
    )


def c05_Fpolytodanz():
    items = checks("danzer", identity="2^n F_A(x + 1)") + checks("danzer", identity="2^n x F_A(x + 1) + 1")
    return len(items) == 10 and all_hold(items)


def c06_interval():
    items = checks("interval", identity="f(order complex of I(P))")
    family = {"chain 1", "chain 2", "chain 3", "chain 4", "B_2", "edge", "triangle", "C4"}
    cover = dict(
        (name, ch["lhs"]) for name, ch in checks("interval", identity="barycentric cover") if ch["holds"]
    )
    return (
        family <= {name for name, _ in items}
        and all_hold(items)
        and all_hold(checks("interval", identity="barycentric cover"))
        and cover.get("edge") == [3, 2]
        and cover.get("triangle") == [7, 9, 3]
    )


def c07_booldecomp():
    r = report("booldecomp")
    by = {c["input"]: c for c in r["cases"]}
    f_ok = by["S = point, d = 2"]["payload"]["f"] == [1, 3, 1] and by["S = edge, d = 4"]["payload"]["f"] == [1, 6, 11, 6, 1]
    seen = by["S = edge, d = 4"]["payload"]["cases_seen"] == [1, 2, 3]
    return (
        f_ok and seen
        and all_hold(checks("booldecomp", identity="matching flag sphere"))
        and all_hold(checks("booldecomp", identity="pieces partition"))
        and all_hold(checks("booldecomp", identity="glued complex verifies"))
    )


def c08_gamma_recursion():
    sub = lambda c: "subdivided at" in c["input"]  # noqa: E731
    inputs = {c["input"].split(" subdivided")[0] for c in report("gamcheb")["cases"] if sub(c)}
    return (
        inputs == {"C5", "C6", "C7", "C8", "C9", "C5*C5"}
        and all_hold(checks("gamcheb", sub, "gamma(c') = gamma(c) + t gamma(lk e)"))
        and all_hold(checks("gamcheb", sub, "h_i(lk e) <= h_i(c)"))
    )


def c09_balanced():
    g = find_balanced_coloring(cross_polytope_boundary(3))
    d = signed_unused_color_complex(g)
    direct_ok = d.f_vector() == (1, 54, 36, 8) == dgamma_fvector_formula(f_vector(g.complex), 3)
    nonface = [
        vertices_form_face(d, [a, b])
        for a in d.vertices if a.F == {3}
        for b in d.vertices if b.F == {2, 4}
    ]
    small = lambda c: c["payload"].get("D", 9) <= 3  # noqa: E731
    return (
        direct_ok
        and unused_colors(g, {3}) == {1, 3}
        and bool(nonface) and not any(nonface)
        and all_hold(checks("balanced", small, "direct triple count = formula"))
        and all_hold(checks("balanced", identity="octahedron") + checks("balanced", identity="no vertex over"))
    )


def c10_comparisons():
    ok = True
    for name in ("danzinput", "invtcheb"):
        r = report(name)
        ok &= r["kind"] == "comparison"
        inputs = {c["input"].split(",")[0] for c in r["cases"]}
        ok &= {"Δ = C5", "Δ = C5*C5"} <= inputs
    tables = [ch for _, ch in checks("danzinput", identity="[alpha^k]")]
    ok &= bool(tables) and all("table" in ch for ch in tables)
    ok &= all(ch["holds"] is (all(row["agree"] for row in ch["table"])) for ch in tables)
    ok &= danzinput_lhs(h_vector((1, 5, 5)), (1, 3, 1)) == RatPoly((1, 2))
    hand = [c for c in report("danzinput")["cases"] if c["input"] == "Δ = C5, Γ: edge plus point"]
    ok &= bool(hand) and hand[0]["payload"]["lhs_alpha"] == ["1/1", "2/1"]
    return ok


def c11_kruskal():
    return all_hold(checks("kruskal"))


CRITERIA = [
    (1, "gamma/g Chebyshev inversion on cycles, joins, cross-polytopes and suspensions", c01_gamcheb),
    (2, "T(P)(u) = g(2u) on the same h-vectors", c02_tcheb_of_P),
    (3, "Tchebyshev face counts under 5 random orders and T(F_A) = F_T(A)", c03_tchebF),
    (4, "mirroring complex face counts and vertex stars", c04_danzer),
    (5, "mirroring complex f~ and f through F_A(x + 1)", c05_Fpolytodanz),
    (6, "interval poset order complexes and barycentric covers", c06_interval),
    (7, "Boolean decompositions, edge subdivision pieces and gluing", c07_booldecomp),
    (8, "gamma recursion and link h-inequality under edge subdivision", c08_gamma_recursion),
    (9, "signed unused color complex counts and the octahedron non-face", c09_balanced),
    (10, "comparison suites complete with per-k tables and the 1 + 2 alpha hand value", c10_comparisons),
    (11, "Kruskal-Katona test against exhaustive enumeration on 5 vertices", c11_kruskal),
]


def summary_lines():
    return [
        f"criterion {n:>2}: {'PASS' if RESULTS[n] else 'FAIL'}  {text}"
        for n, text, _ in CRITERIA if n in RESULTS
    ]


@pytest.mark.parametrize("number,text,fn", CRITERIA, ids=[f"criterion_{n:02d}" for n, _, _ in CRITERIA])
def test_criterion(number, text, fn):
    ok = bool(fn())
    RESULTS[number] = ok
    print(f"criterion {number:>2}: {'PASS' if ok else 'FAIL'}  {text}")
    assert ok


if __name__ == "__main__":
    for n, text, fn in CRITERIA:
        RESULTS[n] = bool(fn())
    print("\n".join(summary_lines()))
    sys.exit(0 if all(RESULTS.values()) else 1)
