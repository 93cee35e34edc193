"""Zagier's function F and the derivative identities at x = 1."""
from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

import mpmath

from ..verdict import numeric_verdict
from .quadrature import GUARD_DIGITS, quad_semiinfinite


def zagier_F(x, dps: int = 50):
    """F(x) = int_0^oo (1/(1 - e^-t) - 1/t) ln(1 - e^{-xt}) dt, x > 0."""
    with mpmath.workdps(dps + GUARD_DIGITS):
        x = mpmath.mpmathify(x)
        if x <= 0:
            raise ValueError("F needs x > 0")

        def f(t):
            return (1 / -mpmath.expm1(-t) - 1 / t) * mpmath.log(-mpmath.expm1(-x * t))

        return quad_semiinfinite(f, dps=dps, rate=float(min(x, 1)))


def zagier_F_at_1(dps: int = 50):
    """-gamma^2/2 - pi^2/12 - gamma_1 from the Euler and first Stieltjes constants."""
    with mpmath.workdps(dps + GUARD_DIGITS):
        return -mpmath.euler ** 2 / 2 - mpmath.pi ** 2 / 12 - mpmath.stieltjes(1)


def derivative(f, x, n: int, h, levels: int = 3):
    """n-th derivative by central differences with Richardson extrapolation in h^2."""
    if n == 0:
        return f(x)
    table = []
    for lvl in range(levels):
        step = h / 2 ** lvl
        d = mpmath.fsum((-1) ** k * comb(n, k) * f(x + (mpmath.mpf(n) / 2 - k) * step) for k in range(n + 1))
        table.append(d / step ** n)
    # eliminate h^2, h^4, ...
    for m in range(1, levels):
        table = [(4 ** m * table[i + 1] - table[i]) / (4 ** m - 1) for i in range(len(table) - 1)]
    return table[0]


def zagier_derivatives(n: int, dps: int = 60) -> list:
    """[F(1), F'(1), ..., F^(n)(1)] with step 10^(-dps/(n+2))."""
    if n > dps // 6:
        raise ValueError("derivative order too high for the precision budget")
    cache = {}

    def F(x):
        key = mpmath.nstr(x, dps + GUARD_DIGITS)
        if key not in cache:
            cache[key] = zagier_F(x, dps + 10)
        return cache[key]

    with mpmath.workdps(dps + GUARD_DIGITS):
        h = mpmath.mpf(10) ** (-mpmath.mpf(dps) / (n + 2))
        return [derivative(F, mpmath.mpf(1), m, h) for m in range(n + 1)]


def thm7d_sides(n: int, derivs: list):
    """Both sides of the order-n derivative identity at x = 1."""
    lhs = (1 + (-1) ** n) * derivs[n]
    lhs += (-1) ** n * mpmath.fsum(comb(n, j) * factorial(n - 1) // factorial(j - 1) * derivs[j] for j in range(1, n))
    rhs = (-1) ** (n - 1) * factorial(n - 1) * (mpmath.pi ** 2 / 6 * n - mpmath.harmonic(n - 1))
    return lhs, rhs


def check_thm7d(n: int, dps: int = 60, tol=None):
    if n < 2:
        raise ValueError("the identity starts at n = 2")
    if tol is None:
        tol = mpmath.mpf(10) ** (-(dps // 3))
    derivs = zagier_derivatives(n, dps)
    with mpmath.workdps(dps + GUARD_DIGITS):
        lhs, rhs = thm7d_sides(n, derivs)
        return numeric_verdict("thm7d", (n,), lhs, rhs, tol, dps)


def check_functional_equation(x, dps: int = 50, tol=None, derivative_form: bool = True):
    """F'(x) - F'(1/x)/x^2 = -pi^2/6 + pi^2/(6x^2) + ln(x)/x, or undifferentiated

    F(x) + F(1/x) = -pi^2 x/6 - pi^2/(6x) + ln^2(x)/2 + pi^2/3 + 2F(1).
    """
    if tol is None:
        tol = mpmath.mpf(10) ** (-(dps // 3))
    with mpmath.workdps(dps + GUARD_DIGITS):
        x = mpmath.mpmathify(x)
        pi2 = mpmath.pi ** 2
        F = lambda u: zagier_F(u, dps + 10)
        if derivative_form:
            h = mpmath.mpf(10) ** (-mpmath.mpf(dps) / 3)
            lhs = derivative(F, x, 1, h) - derivative(F, 1 / x, 1, h) / x ** 2
            rhs = -pi2 / 6 + pi2 / (6 * x ** 2) + mpmath.log(x) / x
        else:
            lhs = F(x) + F(1 / x)
            rhs = -pi2 * x / 6 - pi2 / (6 * x) + mpmath.log(x) ** 2 / 2 + pi2 / 3 + 2 * F(1)
        return numeric_verdict("zagier_functional_eq", (x,), lhs, rhs, tol, dps)
