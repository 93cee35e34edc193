"""Hurwitz and Lerch zeta, polylogarithm, Dirichlet L and Bessel K at high precision."""
from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import mpmath

from .quadrature import GUARD_DIGITS, quad_semiinfinite


def _check_s(s):
    if s == 1:
        raise ZeroDivisionError("zeta(s, a) has a pole at s = 1")


def hurwitz_zeta(s, a, dps: int = 50, method: str = "series"):
    """zeta(s, a) by ``series`` (mpmath), ``hermite`` (Hermite's integral) or ``contour_thm12``.

    The contour form is the cot-kernel line integral at Re = c = 1/2.
    """
    _check_s(s)
    with mpmath.workdps(dps + GUARD_DIGITS):
        s = mpmath.mpmathify(s)
        a = mpmath.mpmathify(a)
        if mpmath.re(a) <= 0:
            raise ValueError("hurwitz_zeta needs Re a > 0")
        if method == "series":
            if mpmath.re(s) <= 1:
                raise ValueError("series method needs Re s > 1")
            return mpmath.zeta(s, a)
        if method == "hermite":
            return _hermite(s, a, dps)
        if method == "contour_thm12":
            if mpmath.re(s) <= 1:
                raise ValueError("contour representation needs Re s > 1")
            return _contour(s, a, dps)
    raise ValueError(f"unknown method {method!r}")


def _hermite(s, a, dps):
    def f(y):
        return (a * a + y * y) ** (-s / 2) * mpmath.sin(s * mpmath.atan(y / a)) / mpmath.expm1(2 * mpmath.pi * y)

    grow = max(0, -float(mpmath.re(s)))
    integral = quad_semiinfinite(f, dps=dps, rate=2 * float(mpmath.pi), degree=grow,
                                 scale=float(abs(a) + 1) ** grow)
    return a ** (-s) / 2 + a ** (1 - s) / (s - 1) + 2 * integral


def _contour(s, a, dps, c=mpmath.mpf(1) / 2):
    """-int_0^oo [cos(s phi) cos(pi c) sin(pi c) - sinh(pi t) cosh(pi t) sin(s phi)]
    / ((w^2 + t^2)^(s/2) (cosh^2(pi t) - cos^2(pi c))) dt,  w = c + a - 1, phi = atan(t/w).

    Valid for w > 0; smaller a is first moved up with zeta(s, a) = a^-s + zeta(s, a + 1).
    """
    head = 0
    while mpmath.re(c + a - 1) <= 0:
        head += a ** (-s)
        a += 1
    w = c + a - 1
    pc = mpmath.pi * c
    cs = mpmath.cos(pc) * mpmath.sin(pc)
    sc2 = mpmath.sin(pc) ** 2

    # As t grows the bracket over (cosh^2 - cos^2) tends to -sin(s phi), whose
    # integral against (w^2 + t^2)^(-s/2) is w^(1-s)/(s-1) in closed form.
    # Splitting that piece off leaves an integrand decaying like exp(-2 pi t).
    def f(t):
        phi = mpmath.atan2(t, w) if mpmath.im(w) == 0 else mpmath.atan(t / w)
        pt = mpmath.pi * t
        sh = mpmath.sinh(pt)
        den = sh * sh + sc2  # cosh^2(pi t) - cos^2(pi c) without cancellation
        # sinh cosh - den = sinh exp(-pi t) - sin^2(pi c)
        excess = -mpmath.expm1(-2 * pt) / 2 - sc2
        num = -mpmath.cos(s * phi) * cs + mpmath.sin(s * phi) * excess
        return num / (den * (w * w + t * t) ** (s / 2))

    tail = w ** (1 - s) / (s - 1)
    grow = max(0.0, -float(mpmath.re(s)))
    return head + tail + quad_semiinfinite(f, dps=dps, rate=2 * float(mpmath.pi), degree=grow)


# --------------------------------------------------------------------------

def lerch_phi(z, s, a, dps: int = 50):
    """Phi(z, s, a) = sum_{n>=0} z^n (n + a)^-s for |z| < 1, or |z| = 1 with Re s > 1."""
    with mpmath.workdps(dps + GUARD_DIGITS):
        z = mpmath.mpmathify(z)
        s = mpmath.mpmathify(s)
        a = mpmath.mpmathify(a)
        az = abs(z)
        if az > 1:
            raise ValueError("Lerch series diverges for |z| > 1")
        if az == 1 and mpmath.re(s) <= 1:
            raise ValueError("|z| = 1 needs Re s > 1")
        if z == 1:
            return mpmath.zeta(s, a)
        if z == -1:
            return 2 ** (-s) * (mpmath.zeta(s, a / 2) - mpmath.zeta(s, (a + 1) / 2))
        if az <= mpmath.mpf(3) / 4:
            return mpmath.nsum(lambda n: z ** n * (n + a) ** (-s), [0, mpmath.inf], method="direct",
                               steps=[10 * (dps + GUARD_DIGITS)])
        return mpmath.lerchphi(z, s, a)


def polylog(s, z, dps: int = 50):
    """Li_s(z) = z Phi(z, s, 1)."""
    with mpmath.workdps(dps + GUARD_DIGITS):
        z = mpmath.mpmathify(z)
        if z == 0:
            return mpmath.mpf(0)
        return z * lerch_phi(z, s, 1, dps)


@dataclass(frozen=True)
class DirichletCharacter:
    """Character mod k stored as its value table chi(0..k-1)."""

    modulus: int
    values: tuple

    def __call__(self, n: int):
        return self.values[n % self.modulus]

    @classmethod
    def principal(cls, k: int) -> "DirichletCharacter":
        return cls(k, tuple(1 if gcd(n, k) == 1 else 0 for n in range(k)))

    @classmethod
    def from_generator(cls, k: int, g: int, r: int) -> "DirichletCharacter":
        """chi(g^e) = exp(2 pi i r e / phi(k)) for a cyclic group (Z/k)^* generated by g."""
        units = [n for n in range(1, k) if gcd(n, k) == 1]
        order = len(units)
        table = {}
        x = 1
        for e in range(order):
            table[x] = (r * e) % order
            x = x * g % k
        if sorted(table) != units:
            raise ValueError(f"{g} does not generate the units mod {k}")
        vals = []
        for n in range(k):
            if n in table:
                e = table[n]
                if (2 * e) % order == 0:
                    vals.append(1 if e == 0 else -1)
                else:
                    vals.append(("root", e, order))
            else:
                vals.append(0)
        return cls(k, tuple(vals))

    def value(self, n: int):
        """Numeric value; symbolic roots of unity are evaluated at the current precision."""
        v = self(n)
        if isinstance(v, tuple):
            _, e, order = v
            return mpmath.expjpi(2 * mpmath.mpf(e) / order)
        return v

    @property
    def is_real(self) -> bool:
        return all(not isinstance(v, tuple) for v in self.values)


def dirichlet_L(s, chi: DirichletCharacter, dps: int = 50, method: str = "series"):
    """L(s, chi) = k^-s sum_m chi(m) zeta(s, m/k)."""
    k = chi.modulus
    with mpmath.workdps(dps + GUARD_DIGITS):
        total = 0
        for m in range(1, k + 1):
            v = chi.value(m)
            if v != 0:
                total += v * hurwitz_zeta(s, mpmath.mpf(m) / k, dps, method)
        return mpmath.mpf(k) ** (-s) * total


def bessel_k_integral(s, y, dps: int = 50):
    """K_s(y) = (1/2) int_0^oo exp(-y/2 (t + 1/t)) t^(s-1) dt."""
    with mpmath.workdps(dps + GUARD_DIGITS):
        y = mpmath.mpmathify(y)

        def f(t):
            return mpmath.exp(-y / 2 * (t + 1 / t)) * t ** (s - 1)

        return quad_semiinfinite(f, dps=dps, rate=float(mpmath.re(y)) / 2, degree=max(0, float(mpmath.re(s)) - 1)) / 2
