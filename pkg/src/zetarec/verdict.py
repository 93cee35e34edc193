from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import mpmath

from .exact import PiPoly

EXACT_PASS = "exact_pass"
PASS = "pass"
FAIL = "fail"
INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class Verdict:
    """Outcome of one identity instance.

    Exact checks carry a ``PiPoly`` residual and pass only when it is zero;
    numeric checks carry an mpmath residual compared against ``tolerance``.
    ``extra`` holds secondary residuals (they must vanish too) and any
    diagnostic values worth reporting.
    """

    id: str
    params: tuple
    residual: Any
    status: str
    precision: int | None = None
    tolerance: Any = None
    extra: dict = field(default_factory=dict, compare=False)

    @property
    def ok(self) -> bool:
        return self.status in (EXACT_PASS, PASS)

    @property
    def exact(self) -> bool:
        return isinstance(self.residual, PiPoly)

    def residual_str(self, digits: int = 6) -> str:
        if isinstance(self.residual, PiPoly):
            return "0 (exact)" if self.residual.is_zero() else str(self.residual)
        return mpmath.nstr(self.residual, digits)


def exact_verdict(id: str, params: tuple, residual: PiPoly, **aux: PiPoly) -> Verdict:
    ok = residual.is_zero() and all(r.is_zero() for r in aux.values())
    return Verdict(id, tuple(params), residual, EXACT_PASS if ok else FAIL, extra=dict(aux))


def numeric_verdict(id: str, params: tuple, lhs, rhs, tol, precision: int, **extra) -> Verdict:
    res = abs(lhs - rhs)
    status = PASS if res <= tol else FAIL
    extra = {"lhs": lhs, "rhs": rhs, **extra}
    return Verdict(id, tuple(params), res, status, precision=precision, tolerance=tol, extra=extra)


def gate_extras(v: Verdict, keys, tol=None) -> Verdict:
    """Turn a passing numeric verdict into a failure when any named secondary residual exceeds ``tol``."""
    from dataclasses import replace

    tol = v.tolerance if tol is None else tol
    if v.ok and any(k in v.extra and v.extra[k] > tol for k in keys):
        return replace(v, status=FAIL)
    return v
