"""Double zeta values zeta(a, b) = sum_{n > m >= 1} n^-a m^-b."""
from __future__ import annotations

from fractions import Fraction

import mpmath

from .exact import bernoulli_number
from .numerics.quadrature import GUARD_DIGITS
from .verdict import numeric_verdict


def _bern(n: int):
    b = bernoulli_number(n)
    return mpmath.mpf(b.numerator) / b.denominator


def _tail(a: int, b: int, N: int, eps):
    """sum_{n >= N} n^-a H_{n-1}^(b) via the asymptotic expansion of H_{n-1}^(b).

    For b >= 2, H_{n-1}^(b) = zeta(b) - zeta(b, n) with the Euler-Maclaurin
    series of zeta(b, n); for b = 1, H_{n-1} = gamma + psi(n) expanded likewise.
    Each power n^-c summed over n >= N is a Hurwitz zeta value.
    """
    Z = lambda c: mpmath.zeta(c, N)
    if b == 1:
        out = mpmath.euler * Z(a) - mpmath.zeta(a, N, 1) - Z(a + 1) / 2
        k = 1
        while True:
            term = _bern(2 * k) / (2 * k) * Z(a + 2 * k)
            out -= term
            if abs(term) < eps or k > 200:
                return out
            k += 1
    out = mpmath.zeta(b) * Z(a) - Z(a + b - 1) / (b - 1) - Z(a + b) / 2
    k = 1
    while True:
        term = _bern(2 * k) * mpmath.rf(b, 2 * k - 1) / mpmath.factorial(2 * k) * Z(a + b + 2 * k - 1)
        out -= term
        if abs(term) < eps or k > 200:
            return out
        k += 1


def double_zeta(a: int, b: int, dps: int = 50):
    """zeta(a, b) for integers a >= 2, b >= 1."""
    if a < 2:
        raise ValueError("zeta(a, b) diverges for a < 2")
    if b < 1:
        raise ValueError("b must be >= 1")
    with mpmath.workdps(dps + GUARD_DIGITS):
        N = max(30, dps)
        eps = mpmath.mpf(10) ** (-(dps + 10))
        head = mpmath.mpf(0)
        H = mpmath.mpf(0)
        for n in range(2, N):
            H += mpmath.mpf(n - 1) ** (-b)
            head += H / mpmath.mpf(n) ** a
        return head + _tail(a, b, N, eps)


def double_zeta_integral(a: int, b: int, dps: int = 30):
    """Gamma(a)^-1 int t^(a-1) Li_b(e^-t)/(e^t - 1) dt, an independent check value."""
    from .numerics.quadrature import quad_semiinfinite

    with mpmath.workdps(dps + GUARD_DIGITS):
        f = lambda t: t ** (a - 1) * mpmath.polylog(b, mpmath.exp(-t)) / mpmath.expm1(t)
        return quad_semiinfinite(f, dps=dps, rate=2, degree=a - 1) / mpmath.gamma(a)


def reflection_residual(a: int, b: int, dps: int = 30):
    """|zeta(a,b) + zeta(b,a) - zeta(a)zeta(b) + zeta(a+b)| for a, b >= 2."""
    if a < 2 or b < 2:
        raise ValueError("reflection needs a, b >= 2")
    with mpmath.workdps(dps + GUARD_DIGITS):
        return abs(double_zeta(a, b, dps) + double_zeta(b, a, dps) - mpmath.zeta(a) * mpmath.zeta(b) + mpmath.zeta(a + b))


def theorem4_sides(s: int, dps: int = 30):
    if s < 2:
        raise ValueError("needs s > 1")
    with mpmath.workdps(dps + GUARD_DIGITS):
        lhs = mpmath.fsum(
            mpmath.mpf(2) ** (-2 * (s - k)) * (1 - mpmath.mpf(2) ** (-2 * k))
            * (double_zeta(2 * k, 2 * s - 2 * k, dps) + double_zeta(2 * s - 2 * k, 2 * k, dps))
            for k in range(1, s)
        )
        rhs = mpmath.mpf(2) ** (-2 * s - 1) / 3 * (4 ** s + 6 * s - 1) * mpmath.zeta(2 * s)
        return lhs, rhs


def check_theorem4(s: int, dps: int = 30, tol=None):
    if tol is None:
        tol = mpmath.mpf(10) ** (-(dps - 8))
    lhs, rhs = theorem4_sides(s, dps)
    return numeric_verdict("thm4", (s,), lhs, rhs, tol, dps)


def convolution_bridge(s: int, dps: int = 30):
    """Double-zeta form of the quadratic recurrence zeta(2s+2) = sum f(s,k) zeta(2s-2k) zeta(2k+2).

    Returns (sum f [zeta(A,B) + zeta(B,A)], sum f zeta(A) zeta(B) - zeta(2s+2) sum f).
    """
    with mpmath.workdps(dps + GUARD_DIGITS):
        scale = mpmath.mpf(2) / (4 ** (s + 1) - 1)
        lhs = rhs = wsum = mpmath.mpf(0)
        for k in range(s):
            A, B = 2 * s - 2 * k, 2 * k + 2
            f = scale * (4 ** (k + 1) - 1)
            lhs += f * (double_zeta(A, B, dps) + double_zeta(B, A, dps))
            rhs += f * mpmath.zeta(A) * mpmath.zeta(B)
            wsum += f
        rhs -= mpmath.zeta(2 * s + 2) * wsum
        return lhs, rhs


def weights_exact(s: int) -> list[Fraction]:
    """The rational weights f(s, k) of the quadratic recurrence."""
    return [Fraction(2 * (4 ** (k + 1) - 1), 4 ** (s + 1) - 1) for k in range(s)]
