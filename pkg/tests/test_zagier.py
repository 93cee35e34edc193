"""Zagier's integral F(x): value at 1, derivative identity and functional equation."""
from __future__ import annotations

import mpmath
import pytest

from zetarec.numerics.zagier import check_functional_equation, check_thm7d, zagier_F, zagier_F_at_1


def test_F_at_1():
    with mpmath.workdps(45):
        assert abs(zagier_F(1, 30) - zagier_F_at_1(30)) < mpmath.mpf(10) ** -25


@pytest.mark.parametrize("n", [2, 3])
def test_thm7d_at_p30(n):
    assert check_thm7d(n, 30).ok


@pytest.mark.parametrize("x", [mpmath.mpf(2), mpmath.mpf(1) / 3])
def test_functional_equation(x):
    assert check_functional_equation(x, 30, derivative_form=False).ok
    assert check_functional_equation(x, 30).ok


def test_thm7d_domain():
    with pytest.raises(ValueError):
        check_thm7d(1, 30)
