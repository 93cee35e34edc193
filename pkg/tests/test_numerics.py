"""Quadrature, special functions and the quadrature-constant recurrences."""
from __future__ import annotations

from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from zetarec.numerics import kernels
from zetarec.numerics.quadrature import QuadratureError, QuadratureSpec, quad_semiinfinite, quad_unit_mapped
from zetarec.numerics.recurrences import (CHARACTERS, c_j, c_j_mellin_exp_closed, check_recurrence,
                                          cor3_hypergeometric)
from zetarec.numerics.special import (DirichletCharacter, bessel_k_integral, dirichlet_L, hurwitz_zeta,
                                      lerch_phi, polylog)

TOL30 = mpmath.mpf(10) ** -28


def test_quadrature_oracles():
    with mpmath.workdps(45):
        assert abs(quad_semiinfinite(lambda t: mpmath.exp(-t), dps=30) - 1) < TOL30
        v = quad_semiinfinite(lambda t: t ** 3 / mpmath.expm1(t), dps=30, degree=3)
        assert abs(v - mpmath.pi ** 4 / 15) < TOL30
        r = quad_semiinfinite(lambda t: mpmath.exp(-2 * t), QuadratureSpec(dps=30, rate=2), full=True)
        assert abs(r.value - mpmath.mpf(1) / 2) < TOL30 and r.cutoff > 30
        assert abs(quad_unit_mapped(lambda t: 1 / (1 + t) ** 2, 30) - 1) < TOL30


def test_quadrature_rejects_bad_model():
    with pytest.raises(ValueError):
        quad_semiinfinite(lambda t: 1, dps=20, rate=0)
    with pytest.raises(QuadratureError):
        # a jump inside a panel defeats the error estimate
        quad_semiinfinite(lambda t: mpmath.sign(t - mpmath.mpf(1) / 3) * mpmath.exp(-t), dps=30)


@pytest.mark.parametrize("method", ["hermite", "contour_thm12"])
def test_hurwitz_zeta_methods(method):
    for s, a in [(2, F(1, 4)), (F(37, 10), F(23, 10)), (6, F(1))]:
        with mpmath.workdps(45):
            s_, a_ = mpmath.mpf(s.numerator if isinstance(s, F) else s) / (s.denominator if isinstance(s, F) else 1), \
                mpmath.mpf(a.numerator) / a.denominator
            assert abs(hurwitz_zeta(s_, a_, 30, method) - mpmath.zeta(s_, a_)) < TOL30


def test_hurwitz_zeta_trivial_zero_and_pole():
    with mpmath.workdps(45):
        assert abs(hurwitz_zeta(-4, mpmath.mpf(1) / 2, 30, "hermite")) < TOL30
    with pytest.raises(ZeroDivisionError):
        hurwitz_zeta(1, 2)
    with pytest.raises(ValueError):
        hurwitz_zeta(2, -1)


def test_lerch_polylog_bessel():
    with mpmath.workdps(45):
        assert abs(lerch_phi(mpmath.mpf(1) / 2, 2, 1, 30) - mpmath.polylog(2, 0.5) * 2) < TOL30
        assert abs(polylog(3, mpmath.mpf(-1), 30) + mpmath.mpf(3) / 4 * mpmath.zeta(3)) < TOL30
        assert abs(bessel_k_integral(mpmath.mpf(1) / 3, 2, 30) - mpmath.besselk(mpmath.mpf(1) / 3, 2)) < TOL30


def test_dirichlet_L_oracles():
    chi4 = CHARACTERS["chi4"]
    assert [chi4(n) for n in range(4)] == [0, 1, 0, -1]
    assert chi4.is_real and not CHARACTERS["chi5_quartic"].is_real
    with mpmath.workdps(45):
        assert abs(dirichlet_L(2, chi4, 30) - mpmath.catalan) < TOL30
        assert abs(dirichlet_L(3, chi4, 30) - mpmath.pi ** 3 / 32) < TOL30
        L = dirichlet_L(2, DirichletCharacter.principal(5), 30)
        assert abs(L - (1 - mpmath.mpf(1) / 25) * mpmath.zeta(2)) < TOL30


@given(st.integers(1, 6), st.sampled_from([F(1), F(4), F(1, 4), F(9, 7)]),
       st.floats(min_value=-3, max_value=3, allow_nan=False))
def test_kernel_forms_agree(j, b, t):
    with mpmath.workdps(40):
        t = mpmath.mpf(t)
        k = kernels.kernel_poly(j, b, t)
        assert abs(k - kernels.kernel_binomial(j, b, t)) <= mpmath.mpf(10) ** -30 * max(1, abs(k))


@given(st.integers(1, 6), st.sampled_from([F(1), F(4), F(1, 4)]), st.sampled_from([F(1), F(3, 2), F(2)]))
@settings(max_examples=15)
def test_mellin_closed_form(j, b, x):
    closed = c_j_mellin_exp_closed(j, b, x)
    assert isinstance(closed, F)
    from zetarec.numerics.recurrences import c_j_mellin
    with mpmath.workdps(45):
        num = c_j_mellin(j, b, lambda t: mpmath.exp(-x.numerator * t / x.denominator), 30, rate=float(x))
        assert abs(num - mpmath.mpf(closed.numerator) / closed.denominator) < TOL30


def test_cj_values_finite_and_small():
    with mpmath.workdps(45):
        vals = [c_j(j, F(1, 2), 1, 30) for j in range(1, 5)]
    assert all(mpmath.isfinite(v) for v in vals)


def test_cor3_hypergeometric_guard():
    with pytest.raises(ValueError):
        cor3_hypergeometric(4, 1, 6)
    assert mpmath.isfinite(cor3_hypergeometric(4, 1, F(23, 2)))


KIND_PARAMS = [
    ("lemma1", (3,)), ("post_lemma1_remark", (2,)), ("thm9a", (2, F(1, 3))), ("thm9b", (3, F(1, 2), F(4))),
    ("thm10_lerch", (2, F(1, 3), F(1, 4), F(-1))), ("cor4_L", (2, "chi4")), ("cor4_L", (2, "chi5_quartic")),
    ("cor5a_hyp", (2, F(1), F(1), F(1, 2))), ("cor5b_polylog", (2, F(4), F(-1))),
    ("thm8_mellin", (2, F(4), F(1, 2))), ("cor2_besselK", (2, F(1), F(1))), ("cor3_gamma", (3, F(1, 4), F(27, 2))),
]


@pytest.mark.parametrize("kind, params", KIND_PARAMS)
def test_recurrence_kinds_at_p30(kind, params):
    v = check_recurrence(kind, params, 30)
    assert v.ok, (kind, params, v.residual, v.extra)


def test_recurrence_rejects_unknown_kind():
    with pytest.raises((KeyError, ValueError)):
        check_recurrence("nope", (1,), 30)
