"""Ramanujan polynomials: frozen coefficients, functional equations and derivative identities."""
from __future__ import annotations

from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from zetarec.ramanujan import (EvenPoly, check_theorem7, functional_equation_residual, generalized_Q,
                               poly_derivative_at, ramanujan_R, theorem7_residual)
from zetarec.verdict import EXACT_PASS, FAIL

nonzero = st.fractions(min_value=-50, max_value=50, max_denominator=40).filter(bool)


def test_R3_oracle():
    # R_3(z) = -1/720 + z^2/144 - z^4/720
    assert ramanujan_R(1).coeffs == {0: F(-1, 720), 2: F(1, 144), 4: F(-1, 720)}


def test_Q_degree():
    assert generalized_Q(4).degree == 4
    with pytest.raises(ValueError):
        EvenPoly({1: F(1)})


@given(st.integers(1, 10), nonzero)
def test_functional_equations(s, z):
    assert functional_equation_residual("R_odd", s, z) == 0
    assert functional_equation_residual("Q_even", s, z) == 0


@given(st.integers(0, 8), st.integers(0, 6), st.fractions(max_denominator=10))
def test_derivative_by_hand(s, n, x):
    p = ramanujan_R(s)
    expected = F(0)
    for e, c in p.coeffs.items():
        if e >= n:
            k = 1
            for i in range(n):
                k *= e - i
            expected += c * k * x ** (e - n)
    assert poly_derivative_at(p, n, x) == expected


@pytest.mark.parametrize("part", "abc")
@pytest.mark.parametrize("n", range(1, 7))
def test_thm7(part, n):
    for s in range(1, 11):
        assert check_theorem7(part, n, s).status == EXACT_PASS


def test_thm7_detects_perturbation():
    R = ramanujan_R(3)
    bad = EvenPoly({**R.coeffs, 2: R.coeffs[2] + F(1, 7)})
    assert any(theorem7_residual("a", n, 3, bad) != 0 for n in range(1, 5))
