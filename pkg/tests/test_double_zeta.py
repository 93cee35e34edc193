"""Double zeta values and the quadratic recurrence they feed."""
from __future__ import annotations

from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from zetarec.double_zeta import (check_theorem4, convolution_bridge, double_zeta, double_zeta_integral,
                                 reflection_residual, theorem4_sides, weights_exact)

TOL = mpmath.mpf(10) ** -25


def test_euler_oracles():
    with mpmath.workdps(45):
        assert abs(double_zeta(2, 1, 30) - mpmath.zeta(3)) < TOL
        assert abs(double_zeta(3, 1, 30) - mpmath.pi ** 4 / 360) < TOL
        assert abs(double_zeta(2, 2, 30) - mpmath.pi ** 4 / 120) < TOL


def test_integral_matches_series():
    with mpmath.workdps(45):
        assert abs(double_zeta_integral(3, 2, 30) - double_zeta(3, 2, 30)) < TOL


@given(st.integers(2, 8), st.integers(2, 8))
@settings(max_examples=15)
def test_reflection(a, b):
    assert reflection_residual(a, b, 30) < TOL


@pytest.mark.parametrize("s", range(2, 7))
def test_thm4(s):
    assert check_theorem4(s, 30, mpmath.mpf(10) ** -22).ok


def test_thm4_s2_value():
    with mpmath.workdps(45):
        lhs, rhs = theorem4_sides(2, 30)
        assert abs(lhs - mpmath.pi ** 4 / 320) < TOL and abs(rhs - mpmath.pi ** 4 / 320) < TOL


def test_weights_and_bridge():
    assert weights_exact(1) == [F(2, 5)]
    with mpmath.workdps(45):
        lhs, rhs = convolution_bridge(3, 30)
        assert abs(lhs - rhs) < TOL


def test_divergent_argument():
    with pytest.raises(ValueError):
        double_zeta(1, 2)
