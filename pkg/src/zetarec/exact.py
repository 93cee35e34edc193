"""Exact rational machinery: Bernoulli/Euler numbers and the pi-graded ring.

Every even zeta value zeta(2m) is a rational multiple of pi^(2m), so identities
among them become literal equalities in the ring Q[pi, 1/pi].  ``PiPoly`` is a
sparse element of that ring.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb, factorial
from typing import Iterable, Mapping, Union

__all__ = [
    "PiPoly",
    "PI",
    "bernoulli_number",
    "bernoulli_numbers",
    "bernoulli_poly_eval",
    "euler_number",
    "euler_poly_eval",
    "euler_poly_coeffs",
    "b_star",
    "zeta_even",
    "special_even_value",
    "multinomial",
    "pochhammer",
]

Scalar = Union[int, Fraction]


class PiPoly:
    """Finite sum of r_k * pi^k with rational r_k and integer k.

    Negative exponents are allowed; several displayed identities divide by
    powers of pi.  Zero coefficients are never stored, so two PiPolys are
    equal exactly when their term maps are equal.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Scalar] | None = None):
        clean: dict[int, Fraction] = {}
        if terms:
            for k, r in terms.items():
                r = Fraction(r)
                if r:
                    clean[int(k)] = r
        self._terms = clean

    @classmethod
    def const(cls, r: Scalar) -> "PiPoly":
        return cls({0: r})

    @classmethod
    def monomial(cls, k: int, r: Scalar = 1) -> "PiPoly":
        return cls({k: r})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def coeff(self, k: int) -> Fraction:
        return self._terms.get(k, Fraction(0))

    @staticmethod
    def _lift(other) -> "PiPoly":
        if isinstance(other, PiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return PiPoly({0: other})
        return NotImplemented

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, r in other._terms.items():
            out[k] = out.get(k, 0) + r
        return PiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return PiPoly({k: -r for k, r in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiPoly({k: r * other for k, r in self._terms.items()})
        other = self._lift(other)
        if other is NotImplemented:
            return other
        out: dict[int, Fraction] = {}
        for a, ra in self._terms.items():
            for b, rb in other._terms.items():
                out[a + b] = out.get(a + b, 0) + ra * rb
        return PiPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if isinstance(other, PiPoly):
            return self * other.inverse()
        return NotImplemented

    def __rtruediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def inverse(self) -> "PiPoly":
        if not self.is_monomial():
            raise ZeroDivisionError("only single-term PiPolys are invertible")
        (k, r), = self._terms.items()
        return PiPoly({-k: 1 / r})

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        out = PiPoly.const(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def evaluate(self, dps: int = 50):
        """Numeric value with mpmath at ``dps`` digits."""
        import mpmath

        with mpmath.workdps(dps + 5):
            v = mpmath.fsum(
                mpmath.mpf(r.numerator) / r.denominator * mpmath.pi ** k
                for k, r in self._terms.items()
            )
        return +v

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for k in sorted(self._terms, reverse=True):
            r = self._terms[k]
            parts.append(str(r) if k == 0 else f"{r} * pi^{k}")
        return " + ".join(parts)

    def __repr__(self):
        return f"PiPoly({self._terms!r})"


PI = PiPoly.monomial(1)


# --------------------------------------------------------------------------
# Bernoulli and Euler numbers

class _Table:
    """Append-only memo of a sequence defined by a recurrence on its prefix."""

    def __init__(self, seed: list[Fraction], step):
        self._vals = list(seed)
        self._step = step
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        vals = self._vals
        if n < len(vals):
            return vals[n]
        with self._lock:
            while len(vals) <= n:
                vals.append(self._step(vals, len(vals)))
        return vals[n]


def _bernoulli_step(prev: list[Fraction], s: int) -> Fraction:
    if s > 1 and s % 2:
        return Fraction(0)
    return -Fraction(1, s + 1) * sum(comb(s + 1, k) * prev[k] for k in range(s) if prev[k])


def _euler_step(prev: list[Fraction], n: int) -> Fraction:
    # sech t * cosh t = 1  gives  sum_{k even} C(n, k) E_k = 0 for even n >= 2
    if n % 2:
        return Fraction(0)
    return -sum(comb(n, k) * prev[k] for k in range(0, n, 2))


_BERNOULLI = _Table([Fraction(1)], _bernoulli_step)
_EULER = _Table([Fraction(1)], _euler_step)


def bernoulli_number(n: int) -> Fraction:
    """B_n with B_1 = -1/2, from B_s = -1/(s+1) sum_{k<s} C(s+1,k) B_k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _BERNOULLI.get(n)


def bernoulli_numbers(n: int) -> list[Fraction]:
    return [bernoulli_number(k) for k in range(n + 1)]


def bernoulli_poly_eval(n: int, x: Scalar) -> Fraction:
    """B_n(x) = sum_k C(n,k) B_{n-k} x^k."""
    if n < 0:
        raise ValueError("n must be >= 0")
    x = Fraction(x)
    return sum((comb(n, k) * bernoulli_number(n - k) * x ** k for k in range(n + 1)), Fraction(0))


def euler_number(n: int) -> Fraction:
    """E_n, the coefficients of sech t = sum E_n t^n / n!."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return _EULER.get(n)


def euler_poly_eval(n: int, x: Scalar) -> Fraction:
    """E_n(x) = sum_k C(n,k) E_k / 2^k (x - 1/2)^(n-k)."""
    if n < 0:
        raise ValueError("n must be >= 0")
    y = Fraction(x) - Fraction(1, 2)
    return sum(
        (comb(n, k) * euler_number(k) / 2 ** k * y ** (n - k) for k in range(0, n + 1, 2)),
        Fraction(0),
    )


def euler_poly_coeffs(n: int) -> list[Fraction]:
    """Monomial coefficients c_0..c_n of E_n(x) in powers of x."""
    coeffs = [Fraction(0)] * (n + 1)
    half = Fraction(-1, 2)
    for k in range(0, n + 1, 2):
        ek = euler_number(k) / 2 ** k * comb(n, k)
        p = n - k
        # (x - 1/2)^p expanded
        for i in range(p + 1):
            coeffs[i] += ek * comb(p, i) * half ** (p - i)
    return coeffs


def b_star(s: int) -> Fraction:
    """B*_s with B*_0 = 1, B*_1 = 1/4 and the binomial sum for s >= 2."""
    if s < 0:
        raise ValueError("s must be >= 0")
    if s == 0:
        return Fraction(1)
    if s == 1:
        return Fraction(1, 4)
    return -Fraction(1, s + 1) * sum(
        comb(s + 1, k) * Fraction(2) ** (k - s) * bernoulli_number(k) for k in range(s)
    )


def pochhammer(a: Scalar, n: int) -> Fraction:
    out = Fraction(1)
    a = Fraction(a)
    for i in range(n):
        out *= a + i
    return out


def multinomial(t: int, parts: Iterable[int]) -> int:
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError("parts must be nonnegative")
    if sum(parts) != t:
        raise ValueError(f"parts sum to {sum(parts)}, expected {t}")
    out = factorial(t)
    for p in parts:
        out //= factorial(p)
    return out


# --------------------------------------------------------------------------
# Even zeta values and their relatives, exactly

def zeta_even(m: int) -> PiPoly:
    """zeta(2m) as a PiPoly; zeta(0) = -1/2."""
    if m < 0:
        raise ValueError("m must be >= 0")
    if m == 0:
        return PiPoly.const(Fraction(-1, 2))
    c = (-1) ** (m + 1) * Fraction(2) ** (2 * m - 1) * bernoulli_number(2 * m) / factorial(2 * m)
    return PiPoly.monomial(2 * m, c)


def _rat_pow(base: int, e: int) -> Fraction:
    return Fraction(base) ** e


def special_even_value(kind: str, arg: int, j: int | None = None) -> PiPoly:
    """Exact values of eta, theta3/4/6, phi_j, theta~_j at even arguments and L at odd ones.

    ``kind`` is one of ``eta``, ``theta3``, ``theta4``, ``theta6``, ``phi``,
    ``theta_tilde`` (the last two need ``j``) or ``calL_odd``.
    """
    if kind == "calL_odd":
        if arg < 1 or arg % 2 == 0:
            raise ValueError("calL_odd needs an odd argument >= 1")
        k = (arg - 1) // 2
        c = (-1) ** k * euler_number(2 * k) / (Fraction(4) ** (k + 1) * factorial(2 * k))
        return PiPoly.monomial(2 * k + 1, c)
    if arg < 0 or arg % 2:
        raise ValueError(f"{kind} needs an even argument >= 0")
    z = zeta_even(arg // 2)
    s = arg
    if kind == "eta":
        return (1 - _rat_pow(2, 1 - s)) * z
    if kind == "theta3":
        return (1 - _rat_pow(3, 1 - s)) * z
    if kind == "theta4":
        return (_rat_pow(2, 1 - s) - _rat_pow(4, 1 - s)) * z
    if kind == "theta6":
        return (-1 + _rat_pow(2, 1 - s) + _rat_pow(3, 1 - s) - _rat_pow(6, 1 - s)) * z
    if kind == "phi":
        if not j:
            raise ValueError("phi needs j >= 1")
        return z / _rat_pow(j, s)
    if kind == "theta_tilde":
        if not j:
            raise ValueError("theta_tilde needs j >= 1")
        return (1 - _rat_pow(j, -s)) * z
    raise ValueError(f"unknown kind {kind!r}")
