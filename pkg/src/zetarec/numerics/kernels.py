"""Polynomial kernels behind the zeta-type recurrences.

For any f(s) = Gamma(s)^-1 int t^(s-1) g(t) dt the even values obey

    b^j f(2j) = (-1)^(j-1) [ c_j + sum_{k<j} (-1)^k pi^(2j-2k) b^k f(2k) / (2j-2k+1)! ]

with c_j = (pi (2j)!)^-1 int K_j(b, t) g(t) dt, where

    K_j(b, t) = sqrt(b) (pi^2 + b t^2)^j sin(2j arctan(sqrt(b) t / pi))
              = sum_{k=1}^{j} C(2j, 2k-1) (-1)^(k-1) pi^(2j-2k+1) b^k t^(2k-1).

Only integer powers of b occur in the polynomial form, so it is used for
every b, real or complex; the trigonometric form is kept as a cross-check.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

import mpmath


def kernel_coeffs(j: int) -> list[tuple[int, int, int]]:
    """Terms (binomial * sign, power of pi, power of b) of K_j; t-power is 2k-1 = 2*bpow - 1."""
    return [(comb(2 * j, 2 * k - 1) * (-1) ** (k - 1), 2 * j - 2 * k + 1, k) for k in range(1, j + 1)]


def kernel_poly(j: int, b, t):
    """K_j(b, t) in entire polynomial form."""
    pi = mpmath.pi
    out = 0
    for c, ppow, k in kernel_coeffs(j):
        out += c * pi ** ppow * b ** k * t ** (2 * k - 1)
    return out


def kernel_trig(j: int, b, t):
    """K_j(b, t) through the arctan/sin composition; principal sqrt(b)."""
    rb = mpmath.sqrt(b)
    pi = mpmath.pi
    return rb * (pi ** 2 + b * t * t) ** j * mpmath.sin(2 * j * mpmath.atan(rb * t / pi))


def kernel_binomial(j: int, b, t):
    """i[(pi - i sqrt(b) t)^2j - (pi + i sqrt(b) t)^2j]/2, the binomial identity form."""
    rb = mpmath.sqrt(b)
    pi = mpmath.pi
    return 1j * ((pi - 1j * rb * t) ** (2 * j) - (pi + 1j * rb * t) ** (2 * j)) / 2 * rb


def generic_sum_coeffs(j: int) -> list[tuple[Fraction, int, int]]:
    """Terms of sum_{k=1}^j (-1)^k pi^(2j-2k) t^(2k-1) / ((2j-2k+1)!(2k-1)!) as (coeff, pi power, t power)."""
    return [
        (Fraction((-1) ** k, factorial(2 * j - 2 * k + 1) * factorial(2 * k - 1)), 2 * j - 2 * k, 2 * k - 1)
        for k in range(1, j + 1)
    ]


def mellin_kernel(j: int, b, t):
    """sqrt(b)[(sqrt(b) t - 1)^2j - (sqrt(b) t + 1)^2j] as -2 sum_n C(2j, 2n-1) b^n t^(2n-1)."""
    out = 0
    for n in range(1, j + 1):
        out += comb(2 * j, 2 * n - 1) * b ** n * t ** (2 * n - 1)
    return -2 * out


def mellin_kernel_direct(j: int, b, t):
    rb = mpmath.sqrt(b)
    return rb * ((rb * t - 1) ** (2 * j) - (rb * t + 1) ** (2 * j))


def recurrence_rhs(j: int, b, c_j, lower: dict):
    """(-1)^(j-1)[c_j + sum_{k<j} (-1)^k pi^(2j-2k) b^k f(2k)/(2j-2k+1)!] with f(2k) = lower[k]."""
    pi = mpmath.pi
    s = c_j
    for k in range(1, j):
        s += (-1) ** k * pi ** (2 * j - 2 * k) * b ** k / mpmath.factorial(2 * j - 2 * k + 1) * lower[k]
    return (-1) ** (j - 1) * s


def mellin_rhs(j: int, b, cM, lower: dict):
    """-c^M - sum_{k<j} b^k f(2k)/(2j-2k+1)!."""
    s = -cM
    for k in range(1, j):
        s -= b ** k / mpmath.factorial(2 * j - 2 * k + 1) * lower[k]
    return s
