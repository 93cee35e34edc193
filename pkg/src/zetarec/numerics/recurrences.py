"""Recurrence constants defined by quadrature and the recurrences they feed.

Every check here instantiates one Mellin-type recurrence: the left side is an
independently computed special value, the right side combines the quadrature
constant with lower-order values.
"""
from __future__ import annotations

from dataclasses import replace
from fractions import Fraction
from math import comb, factorial
from typing import Callable

import mpmath

from ..verdict import FAIL, numeric_verdict
from .kernels import kernel_poly, mellin_kernel, mellin_rhs, recurrence_rhs
from .quadrature import GUARD_DIGITS, quad_semiinfinite, quad_unit_mapped
from .special import DirichletCharacter, bessel_k_integral, dirichlet_L, hurwitz_zeta, lerch_phi, polylog

__all__ = [
    "CHARACTERS",
    "RECURRENCE_KINDS",
    "c_j",
    "c_j_lerch",
    "c_j_mellin",
    "c_j_mellin_exp_closed",
    "cor3_hypergeometric",
    "check_recurrence",
    "recurrence_constant",
]


def _mp(x):
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpmathify(x)


def _kernel_scale(j: int, b) -> float:
    return float((mpmath.pi ** 2 + abs(b) + 1) ** j * 4 ** j)


def _hurwitz_weight(a, z=1) -> Callable:
    """g(t) = e^{-(a-1)t}/(e^t - z), written in decaying form."""
    if z == 1:
        return lambda t: mpmath.exp(-a * t) / -mpmath.expm1(-t)
    return lambda t: mpmath.exp(-a * t) / (1 - z * mpmath.exp(-t))


def c_j_lerch(j: int, a, b, z, dps: int = 50):
    """c_j(a, b, z) = (pi (2j)!)^-1 int K_j(b, t) e^{-(a-1)t}/(e^t - z) dt; z = 1 gives c_j(a, b)."""
    if j < 1:
        raise ValueError("j must be >= 1")
    with mpmath.workdps(dps + GUARD_DIGITS):
        a, b, z = _mp(a), _mp(b), _mp(z)
        if b == 0:
            raise ValueError("b must be nonzero")
        if mpmath.re(a) <= 0:
            raise ValueError("needs Re a > 0")
        g = _hurwitz_weight(a, z)
        val = quad_semiinfinite(lambda t: kernel_poly(j, b, t) * g(t), dps=dps, rate=float(mpmath.re(a)),
                                degree=2 * j - 1, scale=_kernel_scale(j, b) * 4)
        return val / (mpmath.pi * mpmath.factorial(2 * j))


def c_j(j: int, a, b=1, dps: int = 50):
    """c_j(a) and c_j(a, b) of the Hurwitz recurrence."""
    return c_j_lerch(j, a, b, 1, dps)


def c_j_mellin(j: int, b, g: Callable, dps: int = 50, rate: float = 1.0, scale: float = 1.0, mapped: bool = False):
    """c_j^M(b) = (2 (2j)!)^-1 int g(t) sqrt(b)[(sqrt(b) t - 1)^2j - (sqrt(b) t + 1)^2j] dt."""
    with mpmath.workdps(dps + GUARD_DIGITS):
        b = _mp(b)
        f = lambda t: g(t) * mellin_kernel(j, b, t)
        if mapped:
            val = quad_unit_mapped(f, dps)
        else:
            val = quad_semiinfinite(f, dps=dps, rate=rate, degree=2 * j - 1, scale=scale * _kernel_scale(j, b))
        return val / (2 * mpmath.factorial(2 * j))


def c_j_mellin_exp_closed(j: int, b, x) -> list[tuple[Fraction, int, int]] | object:
    """Closed binomial form of c_j^M(b, x) for g = e^{-xt}.

    With rational b and x this is an exact Fraction; otherwise an mpmath value.
    """
    terms = [(Fraction(-comb(2 * j, 2 * n - 1) * factorial(2 * n - 1), factorial(2 * j)), n) for n in range(1, j + 1)]
    if isinstance(b, (int, Fraction)) and isinstance(x, (int, Fraction)):
        return sum((c * Fraction(b) ** n / Fraction(x) ** (2 * n) for c, n in terms), Fraction(0))
    return mpmath.fsum(_mp(c) * _mp(b) ** n / _mp(x) ** (2 * n) for c, n in terms)


def cor3_hypergeometric(j: int, b, a, dps: int = 50):
    """-b/(2j-1)! Gamma(a-2)/Gamma(a) 3F2(1, 1/2-j, 1-j; (3-a)/2, 2-a/2; b).

    The upper parameter 1-j makes the series a polynomial of degree j-1 in b;
    it is summed term by term.  Raises ValueError when a lower parameter
    reaches a non-positive integer inside that range.
    """
    with mpmath.workdps(dps + GUARD_DIGITS):
        b, a = _mp(b), _mp(a)
        up = [mpmath.mpf(1), mpmath.mpf(1) / 2 - j, mpmath.mpf(1 - j)]
        lo = [(3 - a) / 2, 2 - a / 2]
        term = mpmath.mpf(1)
        total = mpmath.mpf(0)
        for n in range(j):
            total += term
            if n == j - 1:
                break
            if lo[0] * lo[1] == 0:
                raise ValueError("3F2 lower parameter is a non-positive integer in the summation range")
            term = term * up[0] * up[1] * up[2] / (lo[0] * lo[1]) * b / (n + 1)
            up = [u + 1 for u in up]
            lo = [l + 1 for l in lo]
        return -b / mpmath.factorial(2 * j - 1) * mpmath.gamma(a - 2) / mpmath.gamma(a) * total


# --------------------------------------------------------------------------

CHARACTERS: dict[str, DirichletCharacter] = {
    "chi4": DirichletCharacter.from_generator(4, 3, 1),
    "chi3": DirichletCharacter.from_generator(3, 2, 1),
    "chi5_quartic": DirichletCharacter.from_generator(5, 2, 1),
    "principal5": DirichletCharacter.principal(5),
}


def recurrence_constant(kind: str, params: tuple, dps: int = 50):
    """The quadrature constant of recurrence ``kind`` at ``params``."""
    if kind in ("thm9a",):
        j, a = params
        return c_j(j, a, 1, dps)
    if kind == "thm9b":
        j, a, b = params
        return c_j(j, a, b, dps)
    if kind in ("thm10_lerch", "cor5a_hyp"):
        j, a, b, z = params
        return c_j_lerch(j, a, b, z, dps)
    if kind == "cor5b_polylog":
        j, b, z = params
        return c_j_lerch(j, 1, b, z, dps)
    if kind == "cor4_L":
        j, name = params
        chi = CHARACTERS[name]
        k = chi.modulus
        with mpmath.workdps(dps + GUARD_DIGITS):
            total = 0
            for m in range(1, k + 1):
                v = chi.value(m)
                if v != 0:
                    total += v * c_j(j, Fraction(m, k), 1, dps)
            return total / mpmath.mpf(k) ** (2 * j)
    if kind == "thm8_mellin":
        j, b, x = params
        x = _mp(x)
        return c_j_mellin(j, b, lambda t: mpmath.exp(-x * t), dps, rate=float(mpmath.re(x)))
    if kind == "cor2_besselK":
        j, b, y = params
        y = _mp(y)
        g = lambda t: mpmath.exp(-y / 2 * (t + 1 / t)) / 2
        return c_j_mellin(j, b, g, dps, rate=float(mpmath.re(y)) / 2)
    if kind == "cor3_gamma":
        j, b, a = params
        if _mp(a) <= 2 * j:
            raise ValueError("needs Re a > 2j")
        a = _mp(a)
        return c_j_mellin(j, b, lambda t: (1 + t) ** (-a), dps, mapped=True)
    raise KeyError(f"no quadrature constant for {kind!r}")


def _lower(f: Callable, j: int) -> dict:
    return {k: f(k) for k in range(1, j)}


def check_recurrence(kind: str, params: tuple, dps: int = 50, tol=None):
    """Numeric verdict for recurrence ``kind``; tolerance 10^-(dps-10) unless given."""
    if kind in ("thm11_eisenstein", "thm13_lattice"):
        from .. import lattice

        return lattice.check_recurrence(kind, params, dps, tol)
    if tol is None:
        tol = mpmath.mpf(10) ** (-(dps - 10))
    with mpmath.workdps(dps + GUARD_DIGITS):
        extra = {}
        if kind == "lemma1":
            (j,) = params
            lhs = quad_semiinfinite(lambda t: kernel_poly(j, 1, t) / mpmath.expm1(t), dps=dps,
                                    degree=2 * j, scale=_kernel_scale(j, 1))
            rhs = j * mpmath.pi ** (2 * j + 1) / (2 * j + 1)
        elif kind in ("post_lemma1_remark", "post_lemma1_remark_printed"):
            (j,) = params
            pi = mpmath.pi
            # (pi^2 + t^2)^-j sin(2j arctan(t/pi)) = Im (pi - i t)^-2j
            lhs = -quad_semiinfinite(lambda t: mpmath.im((pi - 1j * t) ** (-2 * j)) / mpmath.expm1(t), dps=dps)
            bracket = mpmath.mpf(1) / 2 - 1 / (2 * (1 - mpmath.mpf(2 * j))) - (1 - mpmath.mpf(2) ** (-2 * j)) * (
                mpmath.zeta(2 * j) if j else mpmath.mpf(-1) / 2)
            rhs = (pi if kind.endswith("printed") else pi ** (1 - 2 * j)) * bracket
        elif kind in ("thm9a", "thm9b"):
            j, a = params[:2]
            b = _mp(params[2]) if kind == "thm9b" else mpmath.mpf(1)
            a_ = _mp(a)
            f = lambda k: mpmath.zeta(2 * k, a_)
            lhs = b ** j * f(j)
            rhs = recurrence_rhs(j, b, recurrence_constant(kind, params, dps), _lower(f, j))
        elif kind == "thm10_lerch":
            j, a, b, z = params
            f = lambda k: lerch_phi(_mp(z), 2 * k, _mp(a), dps)
            lhs = _mp(b) ** j * f(j)
            rhs = recurrence_rhs(j, _mp(b), recurrence_constant(kind, params, dps), _lower(f, j))
        elif kind == "cor5a_hyp":
            j, a, b, z = params
            a_, z_ = _mp(a), _mp(z)
            f = lambda k: a_ ** (-2 * k) * mpmath.hyper([1] + [a_] * (2 * k), [a_ + 1] * (2 * k), z_)
            lhs = _mp(b) ** j * f(j)
            rhs = recurrence_rhs(j, _mp(b), recurrence_constant(kind, params, dps), _lower(f, j))
        elif kind == "cor5b_polylog":
            j, b, z = params
            z_ = _mp(z)
            f = lambda k: polylog(2 * k, z_, dps)
            lhs = _mp(b) ** j * f(j)
            rhs = recurrence_rhs(j, _mp(b), z_ * recurrence_constant(kind, params, dps), _lower(f, j))
        elif kind == "cor4_L":
            j, name = params
            chi = CHARACTERS[name]
            k = chi.modulus
            f = lambda l: dirichlet_L(2 * l, chi, dps)
            lhs = f(j)
            s = recurrence_constant(kind, params, dps)
            for l in range(1, j):
                s += (-1) ** l * mpmath.pi ** (2 * j - 2 * l) * mpmath.mpf(k) ** (2 * l - 2 * j) / mpmath.factorial(2 * j - 2 * l + 1) * f(l)
            rhs = (-1) ** (j - 1) * s
        elif kind == "thm8_mellin":
            j, b, x = params
            f = lambda k: _mp(x) ** (-2 * k)
            cM = recurrence_constant(kind, params, dps)
            lhs = _mp(b) ** j * f(j)
            rhs = mellin_rhs(j, _mp(b), cM, _lower(f, j))
            closed = c_j_mellin_exp_closed(j, b, x)
            extra["closed_form"] = closed
            extra["closed_form_residual"] = abs(cM - _mp(closed))
        elif kind == "cor2_besselK":
            j, b, y = params
            f = lambda k: bessel_k_integral(2 * k, _mp(y), dps) / mpmath.factorial(2 * k - 1)
            lhs = _mp(b) ** j * f(j)
            rhs = mellin_rhs(j, _mp(b), recurrence_constant(kind, params, dps), _lower(f, j))
            extra["besselk_oracle_residual"] = abs(f(j) * mpmath.factorial(2 * j - 1) - mpmath.besselk(2 * j, _mp(y)))
        elif kind == "cor3_gamma":
            j, b, a = params
            a_ = _mp(a)
            cM = recurrence_constant(kind, params, dps)
            lhs = _mp(b) ** j * mpmath.gamma(a_ - 2 * j)
            # multiplied through by Gamma(a): f(2k) = Gamma(a - 2k)/Gamma(a)
            rhs = mellin_rhs(j, _mp(b), mpmath.gamma(a_) * cM, _lower(lambda k: mpmath.gamma(a_ - 2 * k), j))
            extra["hypergeometric_residual"] = abs(cM - cor3_hypergeometric(j, b, a, dps))
        else:
            raise KeyError(f"unknown recurrence kind {kind!r}")
        v = numeric_verdict(kind, tuple(params), lhs, rhs, tol, dps, **extra)
    # secondary oracle residuals gate the verdict too
    if v.ok and any(v.extra.get(k, 0) > tol for k in _AUX_RESIDUALS):
        v = replace(v, status=FAIL)
    return v


_AUX_RESIDUALS = ("closed_form_residual", "hypergeometric_residual", "besselk_oracle_residual")


RECURRENCE_KINDS = (
    "thm8_mellin", "cor2_besselK", "cor3_gamma", "thm9a", "thm9b", "thm10_lerch", "cor4_L",
    "cor5a_hyp", "cor5b_polylog", "thm11_eisenstein", "thm13_lattice", "lemma1", "post_lemma1_remark",
)
