"""Registry of exact zeta/Bernoulli identities.

Each entry builds both sides of one displayed identity from exact values and
returns the difference as a ``PiPoly``; a correct transcription of a theorem
yields the zero polynomial for every admissible parameter.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Callable, Iterable

import mpmath

from .exact import (
    PI,
    PiPoly,
    bernoulli_number,
    bernoulli_poly_eval,
    euler_number,
    euler_poly_coeffs,
    euler_poly_eval,
    special_even_value,
    zeta_even,
)
from .verdict import EXACT_PASS, FAIL, INDETERMINATE, PASS, Verdict, exact_verdict

Z = zeta_even
Q = Fraction


def _p2(e: int) -> Fraction:
    return Q(2) ** e


def _const(r) -> PiPoly:
    return PiPoly.const(r)


def _sgn(k: int) -> int:
    return -1 if k % 2 else 1


# --------------------------------------------------------------------------
# individual identities; each returns (residual, aux residuals)

def _lettington(j: int):
    s = j * PI ** (2 * j) / factorial(2 * j + 1)
    for k in range(1, j):
        s += (-1) ** k * PI ** (2 * j - 2 * k) / factorial(2 * j - 2 * k + 1) * Z(k)
    return Z(j) - (-1) ** (j + 1) * s, {}


_THM1_PREFACTOR = {
    3: lambda n: Q(3) ** (1 - n) - 1,
    4: lambda n: Q(4) ** (1 - n) - Q(2) ** (1 - n),
    6: lambda n: Q(6) ** (1 - n) - Q(3) ** (1 - n) - Q(2) ** (1 - n) + 1,
}


def _thm1_abc(N: int):
    pref = _THM1_PREFACTOR[N]

    def build(j: int):
        two_pi = 2 * PI
        rhs = (-1) ** j * j * two_pi ** (2 * j) / (factorial(2 * j) * Q(N) ** (2 * j - 1))
        acc = _const(0)
        for m in range(j + 1):
            acc += Q((-1) ** (m + 1), factorial(2 * j - 2 * m)) / (_p2(2 * m - 1) * Q(N) ** (2 * j - 2 * m)) * PI ** (-2 * m) * Z(m)
        rhs += (-1) ** (j + 1) * two_pi ** (2 * j) * acc
        return pref(2 * j) * Z(j) - rhs, {}

    return build


def _thm1_de(N: int, M: int, pref_base: int):
    pref = _THM1_PREFACTOR[pref_base]

    def build(j: int):
        n = 2 * j
        lhs = _const(-Q(j) / Q(N) ** (2 * j - 1) * (1 + Q(M) ** (2 * j - 1)))
        for m in range(j + 1):
            lhs += (
                Q(factorial(2 * j), factorial(2 * j - 2 * m))
                * Q((-1) ** (m + 1)) / _p2(2 * m - 1)
                * (1 + Q(M) ** (2 * j - 2 * m)) / Q(N) ** (2 * j - 2 * m)
                * PI ** (-2 * m) * Z(m)
            )
        rhs = pref(n) * factorial(2 * j) * (-1) ** (j + 1) / _p2(4 * j - 1) * PI ** (-2 * j) * Z(j)
        bern = bernoulli_poly_eval(n, Q(1, N)) + bernoulli_poly_eval(n, Q(M, N)) - _p2(-n) * pref(n) * bernoulli_number(n)
        half = bernoulli_poly_eval(n, Q(1, N)) + bernoulli_poly_eval(n, Q(M, N)) - _p2(1 - n) * bernoulli_poly_eval(n, Q(2, N))
        return lhs - rhs, {"bernoulli_form": _const(bern), "duplication": _const(half)}

    return build


def _thm2a_sides(s: int, j: int):
    def weighted_phi(t: int) -> PiPoly:
        return 4 * Q(j) ** (2 * t) / _p2(2 * t) * special_even_value("phi", 2 * t, j)

    rhs = PI ** (2 * s) * Q(2 * s - 1, factorial(2 * s + 1))
    for n in range(1, s):
        rhs += (-1) ** (s - n) * PI ** (2 * n) / factorial(2 * n + 1) * weighted_phi(s - n)
    return weighted_phi(s), rhs


def _thm2a(s: int, j: int = 1):
    # the bracket carries an overall (-1)^(s+1); without it s = 2 already fails
    lhs, rhs = _thm2a_sides(s, j)
    return lhs - (-1) ** (s + 1) * rhs, {}


def _thm2a_printed(s: int, j: int = 1):
    lhs, rhs = _thm2a_sides(s, j)
    return lhs - rhs, {}


def _thm2_generic(kind: str, base: Fraction, lead_scale: Fraction, mult: int, factor: Callable[[int], Fraction]):
    """theta(2j) = (-1)^j pi^2j lead_scale^2j (1 - mult j)/(2j)! + 2 sum ... factor(2(j-m))^-1 theta(2j-2m)."""

    def build(j: int):
        theta = lambda a: special_even_value(kind, a)
        rhs = (-1) ** j * PI ** (2 * j) * lead_scale ** (2 * j) * Q(1 - mult * j, factorial(2 * j))
        for m in range(j):
            rhs += 2 * Q(_sgn(m - 1), factorial(2 * m)) * (base * PI) ** (2 * m) / factor(2 * (j - m)) * theta(2 * j - 2 * m)
        # the same theta, built through zeta via its defining factor
        cross = theta(2 * j) - factor(2 * j) * Z(j) if kind != "theta6" else _const(0)
        return theta(2 * j) - rhs, ({"theta_via_zeta": cross} if kind != "theta6" else {})

    return build


_thm2b = _thm2_generic("theta3", Q(2, 3), Q(2, 3), 3, lambda e: 1 - 3 / Q(3) ** e)
_thm2c = _thm2_generic("theta4", Q(1, 2), Q(1, 2), 4, lambda e: 2 / Q(2) ** e - 4 / Q(4) ** e)
_thm2d = _thm2_generic("theta6", Q(1, 3), Q(1, 3), 6, lambda e: -1 + 2 / Q(2) ** e + 3 / Q(3) ** e - 6 / Q(6) ** e)
_thm2d_printed = _thm2_generic("theta6", Q(1, 3), Q(1, 3), 6, lambda e: -1 + 2 / Q(2) ** e + 3 / Q(3) ** e - 6 / Q(4) ** e)


def _eq_1_5(s: int):
    acc = _const(0)
    for k in range(s):
        acc += (_p2(2 * k + 2) - 1) * Z(s - k) * Z(k + 1)
    res = Z(s + 1) - Q(2) / (_p2(2 * s + 2) - 1) * acc
    aux = {}
    for j in (2, 3):
        tt = lambda a: special_even_value("theta_tilde", a, j)
        phi = lambda a: special_even_value("phi", a, j)
        lhs = (_p2(2 * s + 2) - 1) / (1 - Q(j) ** (-(2 * s + 2))) * tt(2 * s + 2)
        rhs = _const(0)
        for k in range(s):
            rhs += (_p2(2 * k + 2) - 1) / (Q(j) ** (2 * (k + 1)) - 1) * phi(2 * s - 2 * k) * tt(2 * k + 2)
        aux[f"theta_tilde_{j}"] = lhs - 2 * Q(j) ** (2 * (s + 1)) * rhs
    return res, aux


def _williams(n: int):
    L = lambda a: special_even_value("calL_odd", a)
    lhs = _const(0)
    for k in range(1, n + 1):
        lhs += L(2 * k - 1) * L(2 * n - 2 * k + 1)
    res = lhs - (n - Q(1, 2)) * (1 - _p2(-2 * n)) * Z(n)
    aux = {}
    if n >= 2:
        conv = _const(0)
        for k in range(1, n):
            conv += Z(k) * Z(n - k)
        aux["convolution"] = Z(n) - Q(2, 2 * n + 1) * conv
    return res, aux


def _thm5_lhs(n: int) -> Fraction:
    return -Q(1, 2 * n) * (1 - Q(3) ** (1 - 2 * n)) * (_p2(2 * n) - 1) * bernoulli_number(2 * n)


def _thm5(n: int):
    rhs = sum(
        (comb(2 * n - 1, 2 * m) * euler_number(2 * m) / _p2(2 * m) * Q(-1, 6) ** (2 * (n - m) - 1) for m in range(n)),
        Q(0),
    )
    lhs = _thm5_lhs(n)
    aux = {
        "euler_at_third": _const(euler_poly_eval(2 * n - 1, Q(1, 3)) - lhs),
        "euler_symmetry": _const(euler_poly_eval(2 * n - 1, Q(2, 3)) + lhs),
    }
    return _const(lhs - rhs), aux


def _thm5_printed(n: int):
    rhs = sum(
        (comb(2 * n - 1, 2 * m) * euler_number(2 * m) / factorial(2 * m) * Q(-1, 6) ** (2 * (n - m) - 1) for m in range(n)),
        Q(0),
    )
    return _const(_thm5_lhs(n) - rhs), {}


def _gosper_bernoulli(n: int) -> Fraction:
    s = Q(0)
    for i in range(n + 1):
        s += (1 - _p2(1 - i)) * (1 - _p2(i - n + 1)) / (factorial(n - i) * factorial(i)) * bernoulli_number(n - i) * bernoulli_number(i)
    return s - Q(1 - n, factorial(n)) * bernoulli_number(n)


def _thm6(j: int):
    lhs = _const(0)
    for m in range(j + 1):
        lhs += (1 - _p2(1 - 2 * m)) * (1 - _p2(2 * (m - j) + 1)) * Z(m) * Z(j - m)
    res = 2 * lhs + (1 - 2 * j) * Z(j)
    aux = {"gosper_even": _const(_gosper_bernoulli(2 * j)), "gosper_odd": _const(_gosper_bernoulli(2 * j + 1))}
    return res, aux


def _lehmer_6k(n: int):
    s = sum((comb(6 * n + 3, 6 * k) * bernoulli_number(6 * k) for k in range(n + 1)), Q(0))
    zf = _const(0)
    for k in range(n + 1):
        zf += Q(factorial(6 * n + 3), factorial(6 * n - 6 * k + 3)) * Q((-1) ** (k + 1)) / _p2(6 * k - 1) * PI ** (-6 * k) * Z(3 * k)
    return _const(s - (2 * n + 1)), {"zeta_form": zf - (2 * n + 1)}


def _lehmer_6k2_zeta(n: int, sign_shift: int) -> PiPoly:
    zf = _const(0)
    for k in range(n + 1):
        zf += Q(factorial(6 * n + 5), factorial(6 * n - 6 * k + 3)) * Q((-1) ** (k + sign_shift)) / _p2(6 * k + 1) * PI ** (-6 * k - 2) * Z(3 * k + 1)
    return zf - Q(6 * n + 5, 3)


def _lehmer_6k2(n: int):
    s = sum((comb(6 * n + 5, 6 * k + 2) * bernoulli_number(6 * k + 2) for k in range(n + 1)), Q(0))
    return _const(s - Q(6 * n + 5, 3)), {"zeta_form": _lehmer_6k2_zeta(n, 0)}


def _lehmer_6k2_printed(n: int):
    return _lehmer_6k2_zeta(n, 1), {}


def _prop2(k: int):
    coeffs = euler_poly_coeffs(2 * k)
    integral = sum((c / (i + 1) for i, c in enumerate(coeffs)), Q(0))
    rhs = Q((2 * k + 2) * (2 * k + 1)) / (4 * (_p2(2 * k + 2) - 1)) * integral
    return _const(bernoulli_number(2 * k + 2) - rhs), {}


_PROP3_RHS: dict[int, Callable[[int], Fraction]] = {
    4: lambda n: -(n + Q(7, 6)),
    6: lambda n: Q(2 * (n + 1)),
    8: lambda n: -Q(1, 2) * (6 * n + 11) * (n + 1),
    10: lambda n: Q(1, 60) * (6 * n + 13) * (n + 1) * (18 * n ** 2 + 81 * n + 100),
    12: lambda n: -Q(1, 420) * (648 * n ** 4 + 6156 * n ** 3 + 22266 * n ** 2 + 36765 * n + 24185) * (n + 2) * (n + 1),
    14: lambda n: Q(1, 8400) * (6 * n + 17) * (n + 2) * (n + 1)
    * (1944 * n ** 5 + 23652 * n ** 4 + 116046 * n ** 3 + 288423 * n ** 2 + 366675 * n + 196000),
    16: lambda n: -Q(1, 55440) * (6 * n + 19) * (n + 2) * (n + 1)
    * (11664 * n ** 7 + 209952 * n ** 6 + 1623240 * n ** 5 + 6998400 * n ** 4
       + 18213201 * n ** 3 + 28719198 * n ** 2 + 25568993 * n + 10026324),
}

# right sides exactly as typeset; kept to document where they disagree
_PROP3_RHS_PRINTED: dict[int, Callable[[int], Fraction]] = {
    10: lambda n: Q(1, 60) * (6 * n + 13) * (18 * n ** 2 + 81 * n + 100),
    16: lambda n: -Q(1, 55440) * (6 * n + 19) * (n + 2) * (n + 1)
    * (11664 * n ** 7 + 209952 * n ** 6 + 1623240 * n ** 5 + 6998400 * n ** 4
       + 182132 * n ** 3 + 28919198 * n ** 2 + 25568993 * n + 10026324),
}


def _prop3_lhs(q: int, n: int) -> Fraction:
    return sum((comb(6 * n + q + 3, 6 * k + q) * bernoulli_number(6 * k + q) for k in range(n + 1)), Q(0))


def _prop3(q: int, table=_PROP3_RHS):
    def build(n: int):
        return _const(_prop3_lhs(q, n) - table[q](n)), {}

    return build


def _prop1(which: int):
    from .lattice import hurwitz_number_exact as H

    h4, h8, h12, h16 = H(4), H(8), H(12), H(16)
    if which == 1:
        r = -30 * h4 ** 2 + h8
    elif which == 2:
        r = 6 * h4 ** 3 - Q(9, 5) * h4 * h8 + Q(52, 4725) * h12
    elif which == 3:
        r = 68 * h4 ** 2 * h8 - Q(16, 5) * h8 ** 2 - Q(1408, 945) * h4 * h12 + Q(901, 315315) * h16
    else:
        raise ValueError("prop1_hurwitz takes which in {1, 2, 3}")
    return _const(r), {}


@dataclass(frozen=True)
class IdentitySpec:
    tag: str
    build: Callable
    min_param: int
    description: str
    max_param: int | None = None


_REGISTRY: dict[str, IdentitySpec] = {}
PRINTED_VARIANTS: dict[str, IdentitySpec] = {}


def _register(tag, build, min_param, description, max_param=None, table=_REGISTRY):
    table[tag] = IdentitySpec(tag, build, min_param, description, max_param)


_register("lettington_1_2", _lettington, 1, "zeta(2j) via lower even zeta values")
_register("thm1a", _thm1_abc(3), 1, "B_2j(1/3) relation in zeta form")
_register("thm1b", _thm1_abc(4), 1, "B_2j(1/4) relation in zeta form")
_register("thm1c", _thm1_abc(6), 1, "B_2j(1/6) relation in zeta form")
_register("thm1d", _thm1_de(12, 7, 6), 1, "B(1/12)+B(7/12) relation, zeta and Bernoulli forms")
_register("thm1e", _thm1_de(8, 5, 4), 1, "B(1/8)+B(5/8) relation, zeta and Bernoulli forms")
_register("thm2a", _thm2a, 1, "phi_j recurrence (params: s[, j])")
_register("thm2b", _thm2b, 1, "theta3 recurrence")
_register("thm2c", _thm2c, 1, "theta4 recurrence")
_register("thm2d", _thm2d, 1, "theta6 recurrence, 6^{2(j-m)} reading")
_register("eq_1_5", _eq_1_5, 1, "quadratic zeta recurrence and its theta~ form")
_register("williams", _williams, 1, "Dirichlet beta odd-value convolution")
_register("thm5", _thm5, 1, "E_{2n-1}(1/3) Euler-number sum")
_register("thm6_gosper", _thm6, 0, "Gosper-type quadratic zeta identity")
_register("lehmer_6k", _lehmer_6k, 0, "Lehmer lacunary recurrence mod 6, residue 0")
_register("lehmer_6k2", _lehmer_6k2, 0, "Lehmer lacunary recurrence mod 6, residue 2")
_register("prop2", _prop2, 0, "B_{2k+2} from the integral of E_{2k}")
for _q in sorted(_PROP3_RHS):
    _register(f"prop3_{_q}", _prop3(_q), 0, f"lacunary Bernoulli recurrence, offset {_q}")
_register("prop1_hurwitz", _prop1, 1, "Hurwitz-number polynomial relations", max_param=3)

_register("thm2a_printed", _thm2a_printed, 1, "phi_j recurrence without the (-1)^(s+1) factor", table=PRINTED_VARIANTS)
_register("thm2d_printed", _thm2d_printed, 1, "theta6 recurrence, 4^{2(j-m)} as typeset", table=PRINTED_VARIANTS)
_register("thm5_printed", _thm5_printed, 1, "Euler sum with (2m)! as typeset", table=PRINTED_VARIANTS)
_register("lehmer_6k2_printed", _lehmer_6k2_printed, 0, "zeta form with (-1)^{k+1} as typeset", table=PRINTED_VARIANTS)
for _q in sorted(_PROP3_RHS_PRINTED):
    _register(f"prop3_{_q}_printed", _prop3(_q, _PROP3_RHS_PRINTED), 0, "right side as typeset", table=PRINTED_VARIANTS)


def identity_tags() -> list[str]:
    return list(_REGISTRY)


def _lookup(tag: str) -> IdentitySpec:
    spec = _REGISTRY.get(tag) or PRINTED_VARIANTS.get(tag)
    if spec is None:
        raise KeyError(f"unknown identity {tag!r}")
    return spec


def check_exact(tag: str, params) -> Verdict:
    """Residual of identity ``tag`` at ``params`` (an int or tuple of ints)."""
    spec = _lookup(tag)
    if isinstance(params, int):
        params = (params,)
    params = tuple(params)
    if not params or params[0] < spec.min_param or (spec.max_param is not None and params[0] > spec.max_param):
        raise ValueError(f"{tag}: parameter {params} out of range")
    res, aux = spec.build(*params)
    return exact_verdict(tag, params, res, **aux)


def run_suite(tag: str, param_range: Iterable) -> list[Verdict]:
    params = list(param_range)
    if not params:
        raise ValueError("empty parameter range")
    return [check_exact(tag, p) for p in params]


# --------------------------------------------------------------------------
# pseudo-characteristic polynomial scan (report only)

def z3_poly(s: int, x, dps: int = 50):
    """z_s^(3)(x): the mod-3 pseudo-characteristic polynomial at x."""
    with mpmath.workdps(dps + 10):
        x = mpmath.mpf(x)
        c = 3 * (mpmath.mpf(3) ** (-2 * s) - 1)
        lead = (-1) ** s * (3 * s - 1) / (mpmath.factorial(2 * s) * c) * (2 * mpmath.pi / 3) ** (2 * s)
        p = mpmath.fsum(
            (-1) ** m * mpmath.mpf(2) ** (2 * m + 1) * mpmath.pi ** (2 * m) / (mpmath.factorial(2 * m) * mpmath.mpf(3) ** (2 * m)) * x ** (2 * m)
            for m in range(1, s)
        ) / c
        return lead + p


@dataclass(frozen=True)
class ConjectureRow:
    s: int
    k: int
    zeta_k: object
    z_value: object
    lower: object
    upper: object
    holds: bool | None
    status: str


def conjecture1_scan(s_range: Iterable[int], k_choice: str = "2s", dps: int = 50) -> list[ConjectureRow]:
    """Evaluate zeta(k) - {zeta(k)}^2 <= z_s(zeta(k)) <= zeta(k) + {zeta(k)} for each s.

    ``k_choice`` is ``"2s"`` or ``"2s-1"``.  Rows whose margins are below
    the working resolution are marked indeterminate.
    """
    if k_choice not in ("2s", "2s-1"):
        raise ValueError("k_choice must be '2s' or '2s-1'")
    rows = []
    for s in s_range:
        if s < 4:
            raise ValueError("the scan is defined for s >= 4")
        k = 2 * s if k_choice == "2s" else 2 * s - 1
        with mpmath.workdps(dps + 10):
            zk = mpmath.zeta(k)
            frac = zk - mpmath.floor(zk)
            z = z3_poly(s, zk, dps)
            lo, hi = zk - frac ** 2, zk + frac
            margin = min(z - lo, hi - z)
            eps = mpmath.mpf(10) ** (-(dps - 5))
            if abs(margin) < eps:
                holds, status = None, INDETERMINATE
            else:
                holds = bool(margin > 0)
                status = PASS if holds else FAIL
        rows.append(ConjectureRow(s, k, +zk, +z, +lo, +hi, holds, status))
    return rows
