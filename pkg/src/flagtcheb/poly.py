"""
Exact rational polynomials and the face-vector transforms built on them.

Everything here is exact: coefficients are :class:`fractions.Fraction` and no
operation ever rounds.  Polynomials serialize as lists of ``"num/den"``
strings in increasing degree.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

from .complex import SimplicialComplex, edge_subdivision, f_vector, h_vector, link
from .errors import NotSymmetric, OddDegree, ParseError


class RatPoly:
    """Dense univariate polynomial over the rationals; ``coeffs[i]`` is the
    coefficient of ``x**i``.  The zero polynomial has no coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "RatPoly":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def __bool__(self):
        return bool(self.coeffs)

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _lift(other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return RatPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return RatPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return RatPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        s = Fraction(scalar)
        return RatPoly(c / s for c in self.coeffs)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not polynomials")
        out = RatPoly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, arg):
        """Evaluate at a number, or compose when ``arg`` is a polynomial."""
        acc = RatPoly() if isinstance(arg, RatPoly) else Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * arg + c
        return acc

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RatPoly((other,))
        if not isinstance(other, RatPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        if not self.coeffs:
            return "RatPoly(0)"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}" if i == 0 else f"{c}*x^{i}" if i > 1 else f"{c}*x")
        return "RatPoly(" + " + ".join(terms) + ")"

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def int_coeffs(self) -> tuple:
        if not self.is_integral():
            raise ValueError(f"{self!r} has non-integer coefficients")
        return tuple(int(c) for c in self.coeffs)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> list:
        return [f"{c.numerator}/{c.denominator}" for c in self.coeffs]

    @classmethod
    def from_json(cls, data) -> "RatPoly":
        if not isinstance(data, list):
            raise ParseError("polynomial JSON must be a list of coefficient strings")
        try:
            return cls(Fraction(s) for s in data)
        except (ValueError, TypeError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient: {exc}") from None


X = RatPoly.x()


def poly_from_vector(v: Sequence) -> RatPoly:
    """``sum v[i] t^i`` -- the f-polynomial when ``v`` is an f-vector."""
    return RatPoly(v)


def f_poly(c: SimplicialComplex) -> RatPoly:
    return RatPoly(f_vector(c))


# ---------------------------------------------------------------------------
# Chebyshev machinery


@lru_cache(maxsize=None)
def chebyshev_T(n: int) -> RatPoly:
    if n < 0:
        raise ValueError("Chebyshev index must be nonnegative")
    if n == 0:
        return RatPoly((1,))
    if n == 1:
        return X
    return 2 * X * chebyshev_T(n - 1) - chebyshev_T(n - 2)


def tcheb_transform(p: RatPoly) -> RatPoly:
    """The linear map ``x^n -> T_n(x)``."""
    out = RatPoly()
    for n, c in enumerate(p.coeffs):
        if c:
            out = out + c * chebyshev_T(n)
    return out


# ---------------------------------------------------------------------------
# symmetric h-vectors


def _half_degree(h: Sequence[int]) -> int:
    d = len(h) - 1
    if d < 0:
        raise NotSymmetric("empty h-vector")
    if d % 2:
        raise OddDegree(f"h-vector {tuple(h)} has odd degree {d}")
    if any(h[k] != h[d - k] for k in range(d + 1)):
        raise NotSymmetric(f"h-vector {tuple(h)} is not symmetric")
    return d // 2


def gamma_vector(h: Sequence[int]) -> tuple:
    """Coefficients of ``h`` in the basis ``t^i (1+t)^(d-2i)``.

    Solved from the top degree down: the only basis element reaching
    ``t^(d-i)`` among the not-yet-used ones is ``t^i (1+t)^(d-2i)``.
    """
    m = _half_degree(h)
    d = 2 * m
    rest = [Fraction(x) for x in h]
    gamma = []
    for i in range(m + 1):
        g = rest[d - i]
        gamma.append(g)
        for j in range(d - 2 * i + 1):
            rest[i + j] -= g * comb(d - 2 * i, j)
    if any(rest):
        raise NotSymmetric(f"h-vector {tuple(h)} has no gamma expansion")
    return tuple(int(g) for g in gamma)


def gamma_poly(h: Sequence[int]) -> RatPoly:
    return RatPoly(gamma_vector(h))


def g_poly(h: Sequence[int]) -> RatPoly:
    """``h_m + 2 sum_j h_{m-j} T_j(u/2)`` with ``m = d/2``."""
    m = _half_degree(h)
    half = RatPoly((0, Fraction(1, 2)))
    out = RatPoly((h[m],))
    for j in range(1, m + 1):
        out = out + 2 * h[m - j] * chebyshev_T(j)(half)
    return out


def p_poly(h: Sequence[int]) -> RatPoly:
    """``h_m + 2 sum_j h_{m-j} u^j``; satisfies ``T(P)(u) = g(2u)``."""
    m = _half_degree(h)
    return RatPoly([h[m]] + [2 * h[m - j] for j in range(1, m + 1)])


def verify_gamchebinv(h: Sequence[int]) -> bool:
    """Check ``gamma(u) = u^m g(1/u - 2)`` and ``(u+2)^m gamma(1/(u+2)) = g(u)``.

    Both rational substitutions are cleared symbolically:
    ``u^m g((1-2u)/u) = sum_k g_k (1-2u)^k u^(m-k)``.
    """
    m = _half_degree(h)
    g = g_poly(h)
    gamma = gamma_poly(h)
    if g.degree > m or gamma.degree > m:
        return False
    one_minus_2u = RatPoly((1, -2))
    lhs = RatPoly()
    for k, c in enumerate(g.coeffs):
        lhs = lhs + c * one_minus_2u ** k * X ** (m - k)
    u_plus_2 = RatPoly((2, 1))
    rhs = RatPoly()
    for i, c in enumerate(gamma.coeffs):
        rhs = rhs + c * u_plus_2 ** (m - i)
    return lhs == gamma and rhs == g


def F_poly(f: Sequence[int]) -> RatPoly:
    """``sum_j f_{j-1} ((x-1)/2)^j``."""
    half_shift = RatPoly((Fraction(-1, 2), Fraction(1, 2)))
    out = RatPoly()
    for j, c in enumerate(f):
        if c:
            out = out + c * half_shift ** j
    return out


# ---------------------------------------------------------------------------
# local recursions on flag spheres


def complex_gamma(c: SimplicialComplex) -> RatPoly:
    return gamma_poly(h_vector(f_vector(c)))


def gamma_recursion_check(c: SimplicialComplex, e) -> bool:
    """``gamma(c') = gamma(c) + t * gamma(lk_c(e))`` for the subdivision at ``e``."""
    sub = edge_subdivision(c, e)
    lk, _ = link(c, e)
    return complex_gamma(sub) == complex_gamma(c) + X * complex_gamma(lk)


def link_h_inequality(c: SimplicialComplex, e) -> bool:
    lk, _ = link(c, e)
    h_lk = h_vector(f_vector(lk))
    h_c = h_vector(f_vector(c))
    n = max(len(h_lk), len(h_c))
    pad = lambda v: list(v) + [0] * (n - len(v))  # noqa: E731
    return all(a <= b for a, b in zip(pad(h_lk), pad(h_c)))
