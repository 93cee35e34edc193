"""Ramanujan polynomials R_{2s+1}, generalized polynomials Q_r and their derivative identities."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Mapping, Sequence

from .exact import PiPoly, b_star, bernoulli_number, pochhammer
from .verdict import Verdict, exact_verdict


@dataclass(frozen=True)
class EvenPoly:
    """Polynomial with rational coefficients on even powers of z only."""

    coeffs: Mapping[int, Fraction]

    def __post_init__(self):
        clean = {}
        for e, c in self.coeffs.items():
            if e % 2:
                raise ValueError("EvenPoly holds even exponents only")
            c = Fraction(c)
            if c:
                clean[e] = c
        object.__setattr__(self, "coeffs", clean)

    @property
    def degree(self) -> int:
        return max(self.coeffs, default=0)

    def dense(self) -> list[Fraction]:
        out = [Fraction(0)] * (self.degree + 1)
        for e, c in self.coeffs.items():
            out[e] = c
        return out

    def __call__(self, z):
        return poly_derivative_at(self, 0, z)

    def __str__(self):
        if not self.coeffs:
            return "0"
        return " + ".join(f"{c}" if e == 0 else f"{c} * z^{e}" for e, c in sorted(self.coeffs.items()))


def ramanujan_R(s: int) -> EvenPoly:
    """R_{2s+1}(z) = sum_{k=0}^{s+1} B_2k B_{2s+2-2k} / ((2k)! (2s+2-2k)!) z^2k."""
    if s < 0:
        raise ValueError("s must be >= 0")
    return EvenPoly({
        2 * k: bernoulli_number(2 * k) * bernoulli_number(2 * s + 2 - 2 * k) / (factorial(2 * k) * factorial(2 * s + 2 - 2 * k))
        for k in range(s + 2)
    })


def generalized_Q(r: int) -> EvenPoly:
    """Q_r(z) = sum_{k=0}^{[(r+1)/2]} B*_{r+1-2k} B*_2k / ((r+1-2k)! (2k)!) z^2k."""
    if r < 0:
        raise ValueError("r must be >= 0")
    return EvenPoly({
        2 * k: b_star(r + 1 - 2 * k) * b_star(2 * k) / (factorial(r + 1 - 2 * k) * factorial(2 * k))
        for k in range((r + 1) // 2 + 1)
    })


def poly_derivative_at(p: EvenPoly | Sequence, n: int, x) -> Fraction:
    """Exact n-th derivative at x; ``p`` is an EvenPoly or a dense coefficient list."""
    if n < 0:
        raise ValueError("n must be >= 0")
    coeffs = p.dense() if isinstance(p, EvenPoly) else list(p)
    x = Fraction(x)
    total = Fraction(0)
    for e in range(n, len(coeffs)):
        if coeffs[e]:
            total += coeffs[e] * (factorial(e) // factorial(e - n)) * x ** (e - n)
    return total


def functional_equation_residual(which: str, s: int, z) -> Fraction:
    """R_odd: R(z) - z^(2s+2) R(1/z);  Q_even: [R(z) - R(z/2)] - z^(2s+2)[R(1/z) - R(1/(2z))]."""
    z = Fraction(z)
    if z == 0:
        raise ZeroDivisionError("z must be nonzero")
    if which == "R_odd":
        R = ramanujan_R(s)
        return R(z) - z ** (2 * s + 2) * R(1 / z)
    if which == "Q_even":
        R = generalized_Q(2 * s)
        return R(z) - R(z / 2) - z ** (2 * s + 2) * (R(1 / z) - R(1 / (2 * z)))
    raise ValueError("which must be 'R_odd' or 'Q_even'")


def _bracket(n: int, j: int, s: int) -> Fraction:
    return Fraction(factorial(n - 1), factorial(j - 1)) - (-1) ** j * pochhammer(2 * s + 2, n - j)


def theorem7_residual(part: str, n: int, s: int, poly: EvenPoly | None = None) -> Fraction:
    """Left minus right side of the order-n derivative identity at z = 1."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if part == "a":
        R = poly if poly is not None else ramanujan_R(s)
        D = lambda j: poly_derivative_at(R, j, 1)
        base = D(0)
    elif part == "b":
        R = poly if poly is not None else generalized_Q(2 * s)
        D = lambda j: poly_derivative_at(R, j, 1) - Fraction(1, 2 ** j) * poly_derivative_at(R, j, Fraction(1, 2))
        base = poly_derivative_at(R, 0, 1) - poly_derivative_at(R, 0, Fraction(1, 2))
    else:
        raise ValueError("part must be 'a' or 'b'")
    lhs = (1 - (-1) ** n) * D(n)
    for j in range(1, n):
        lhs += comb(n, j) * _bracket(n, j, s) * D(j)
    return lhs - pochhammer(2 * s + 2, n) * base


# --------------------------------------------------------------------------
# Gaussian rationals for the generic identity at z = i

@dataclass(frozen=True)
class GaussQ:
    re: Fraction
    im: Fraction = Fraction(0)

    def __add__(self, o):
        o = _g(o)
        return GaussQ(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, o):
        o = _g(o)
        return GaussQ(self.re - o.re, self.im - o.im)

    def __mul__(self, o):
        o = _g(o)
        return GaussQ(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussQ(-self.re, -self.im)

    def __bool__(self):
        return bool(self.re or self.im)


def _g(x) -> GaussQ:
    return x if isinstance(x, GaussQ) else GaussQ(Fraction(x))


def i_pow(k: int) -> GaussQ:
    return [GaussQ(Fraction(1)), GaussQ(Fraction(0), Fraction(1)), GaussQ(Fraction(-1)), GaussQ(Fraction(0), Fraction(-1))][k % 4]


def theorem7c_residual(n: int, r: int, delta: int, F_derivs: Sequence, S_n) -> GaussQ:
    """Generic identity for F(-1/z) - (-1)^delta (z/i)^r F(z) = S(z/i), integer r.

    ``F_derivs[j]`` is F^(j)(i) for j = 0..n and ``S_n`` is S^(n)(1).
    """
    sd = (-1) ** delta
    neg_r = -r
    lhs = _g(((-1) ** n - sd)) * _g(F_derivs[n])
    lhs = lhs - _g(sd * pochhammer(neg_r, n)) * i_pow(n) * _g(F_derivs[0])
    for j in range(1, n):
        w = (-1) ** n * Fraction(factorial(n - 1), factorial(j - 1)) - sd * (-1) ** (n - j) * pochhammer(neg_r, n - j)
        lhs = lhs + _g(comb(n, j) * w) * i_pow(j - n) * _g(F_derivs[j])
    return lhs - i_pow(-n) * _g(S_n)


def theorem7c_from_R(n: int, s: int, poly: EvenPoly | None = None) -> GaussQ:
    """Specialize the generic identity to F(z) = R(-iz): r = -(2s+2), delta = 0, S = 0."""
    R = poly if poly is not None else ramanujan_R(s)
    F = [i_pow(-j) * _g(poly_derivative_at(R, j, 1)) for j in range(n + 1)]
    return theorem7c_residual(n, -(2 * s + 2), 0, F, 0)


def check_theorem7(part: str, n: int, s: int) -> Verdict:
    """Exact verdict for part a, b, or c (c = generic identity specialized to R_{2s+1})."""
    if part in ("a", "b"):
        res = theorem7_residual(part, n, s)
        return exact_verdict(f"thm7{part}", (n, s), PiPoly.const(res))
    if part == "c":
        g = theorem7c_from_R(n, s)
        # the specialization equals i^n times the part-(a) residual
        link = g - i_pow(n) * _g(theorem7_residual("a", n, s))
        aux = {"imag": PiPoly.const(g.im), "link_re": PiPoly.const(link.re), "link_im": PiPoly.const(link.im)}
        return exact_verdict("thm7c", (n, s), PiPoly.const(g.re), **aux)
    raise ValueError("part must be 'a', 'b' or 'c'")
