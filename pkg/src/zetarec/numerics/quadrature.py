"""Semi-infinite quadrature at a requested number of decimal digits.

The interval (0, T) is split geometrically and each piece handled by mpmath's
tanh-sinh rule; T comes from an explicit tail bound supplied by the caller.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import mpmath

GUARD_DIGITS = 15


class QuadratureError(ArithmeticError):
    """Successive refinement levels did not agree to the target precision."""


@dataclass(frozen=True)
class QuadratureSpec:
    """Target digits ``dps`` and a tail model |f(t)| <= scale * t^degree * exp(-rate t)."""

    dps: int = 50
    rate: float = 1.0
    degree: float = 0.0
    scale: float = 1.0
    max_degree: int = 10


@dataclass(frozen=True)
class QuadResult:
    value: object
    error: object
    cutoff: object


def tail_cutoff(spec: QuadratureSpec):
    """Smallest convenient T with scale * T^degree * exp(-rate T) < 10^-(dps+10)."""
    target = (spec.dps + 10) * mpmath.log(10) + mpmath.log(max(spec.scale, 1e-300))
    rate = mpmath.mpf(spec.rate)
    if rate <= 0:
        raise ValueError("tail model needs a positive decay rate")
    T = target / rate
    for _ in range(50):
        new = (target + spec.degree * mpmath.log(max(T, 1))) / rate
        if abs(new - T) < 1e-6:
            break
        T = new
    return mpmath.ceil(max(T, 1)) + 1


def _breakpoints(T, max_interval=None) -> list:
    pts = [mpmath.mpf(0), mpmath.mpf(1) / 2, mpmath.mpf(1)]
    x = mpmath.mpf(2)
    while x < T:
        pts.append(x)
        x = x * 2 if max_interval is None else min(x * 2, x + max_interval)
    pts.append(mpmath.mpf(T))
    return pts


def quad_semiinfinite(f: Callable, spec: QuadratureSpec | None = None, *, dps: int | None = None,
                      rate: float = 1.0, degree: float = 0.0, scale: float = 1.0,
                      full: bool = False, max_interval: float | None = None):
    """Integral of ``f`` over (0, oo) to ``dps`` digits.

    ``f`` is called inside the raised working precision, so it may use
    ``mpmath`` freely.  Returns the value (at working precision) or a
    ``QuadResult`` when ``full`` is true.  ``max_interval`` caps the piece
    length, which helps oscillatory integrands.
    """
    if spec is None:
        spec = QuadratureSpec(dps=dps or mpmath.mp.dps, rate=rate, degree=degree, scale=scale)
    with mpmath.workdps(spec.dps + GUARD_DIGITS):
        T = tail_cutoff(spec)
        value, err = mpmath.quad(f, _breakpoints(T, max_interval), error=True, maxdegree=spec.max_degree)
        tol = mpmath.mpf(10) ** (-(spec.dps + 2))
        if not mpmath.isfinite(abs(value)) or err > tol * max(1, abs(value)):
            raise QuadratureError(f"quadrature error estimate {mpmath.nstr(err, 3)} above 1e-{spec.dps + 2}")
        if full:
            return QuadResult(value, err, T)
        return value


def quad_unit_mapped(f: Callable, dps: int, full: bool = False):
    """Integral over (0, oo) for algebraically decaying ``f`` via t = u/(1-u)."""

    def g(u):
        if u >= 1:
            return mpmath.mpf(0)
        w = 1 - u
        return f(u / w) / (w * w)

    with mpmath.workdps(dps + GUARD_DIGITS):
        value, err = mpmath.quad(g, [0, mpmath.mpf(1) / 2, mpmath.mpf(3) / 4, 1], error=True, maxdegree=12)
        tol = mpmath.mpf(10) ** (-(dps + 2))
        if err > tol * max(1, abs(value)):
            raise QuadratureError(f"mapped quadrature error estimate {mpmath.nstr(err, 3)}")
        if full:
            return QuadResult(value, err, mpmath.inf)
        return value
