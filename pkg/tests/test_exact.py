"""Exact arithmetic layer: frozen Bernoulli/Euler oracles and PiPoly ring laws."""
from __future__ import annotations

from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, strategies as st

from zetarec.exact import (PI, PiPoly, b_star, bernoulli_number, bernoulli_poly_eval, euler_number,
                           euler_poly_coeffs, euler_poly_eval, multinomial, pochhammer, special_even_value,
                           zeta_even)

# frozen oracle values
BERNOULLI = {0: F(1), 1: F(-1, 2), 2: F(1, 6), 3: F(0), 4: F(-1, 30), 6: F(1, 42), 8: F(-1, 30),
             10: F(5, 66), 12: F(-691, 2730), 14: F(7, 6), 20: F(-174611, 330), 30: F(8615841276005, 14322)}
EULER = {0: 1, 1: 0, 2: -1, 4: 5, 6: -61, 8: 1385, 10: -50521, 12: 2702765}
ZETA = {1: F(1, 6), 2: F(1, 90), 3: F(1, 945), 4: F(1, 9450), 5: F(1, 93555), 6: F(691, 638512875)}


@pytest.mark.parametrize("n, value", sorted(BERNOULLI.items()))
def test_bernoulli_oracle(n, value):
    assert bernoulli_number(n) == value


@pytest.mark.parametrize("n, value", sorted(EULER.items()))
def test_euler_oracle(n, value):
    assert euler_number(n) == value


@pytest.mark.parametrize("m, c", sorted(ZETA.items()))
def test_zeta_even_oracle(m, c):
    z = zeta_even(m)
    assert z == PiPoly.monomial(2 * m, c)
    assert abs(z.evaluate(40) - mpmath.zeta(2 * m)) < mpmath.mpf(10) ** -38


def test_zeta_zero_and_odd_bernoulli():
    assert zeta_even(0) == PiPoly.const(F(-1, 2))
    assert all(bernoulli_number(n) == 0 for n in range(3, 80, 2))


def test_b_star_and_small_values():
    assert b_star(0) == 1 and b_star(1) == F(1, 4)
    assert euler_poly_eval(1, 0) == F(-1, 2)
    assert euler_poly_eval(3, F(1, 2)) == 0
    assert special_even_value("calL_odd", 1) == PiPoly.monomial(1, F(1, 4))
    assert special_even_value("calL_odd", 3) == PiPoly.monomial(3, F(1, 32))
    assert special_even_value("eta", 2) == PiPoly.monomial(2, F(1, 12))


def test_invalid_arguments():
    with pytest.raises(ValueError):
        bernoulli_number(-1)
    with pytest.raises(ValueError):
        zeta_even(-2)
    with pytest.raises(ValueError):
        special_even_value("eta", 3)
    with pytest.raises(ValueError):
        multinomial(4, [1, 1])
    with pytest.raises(ZeroDivisionError):
        PiPoly() .inverse()


def test_pipoly_printing():
    assert str(PiPoly()) == "0"
    assert str(PI ** 2 / 6) == "1/6 * pi^2"


# property tests

small_q = st.fractions(min_value=-20, max_value=20, max_denominator=30)
polys = st.dictionaries(st.integers(-6, 6), small_q, max_size=4).map(PiPoly)


@given(polys, polys, polys)
def test_pipoly_ring_laws(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == PiPoly()


@given(polys, st.integers(0, 5))
def test_pipoly_power(a, n):
    expected = PiPoly.const(1)
    for _ in range(n):
        expected = expected * a
    assert a ** n == expected


@given(small_q.filter(bool), st.integers(-5, 5))
def test_monomial_inverse(c, k):
    m = PiPoly.monomial(k, c)
    assert m * m.inverse() == PiPoly.const(1)


@given(st.integers(0, 30), small_q)
def test_bernoulli_reflection(n, x):
    assert bernoulli_poly_eval(n, 1 - x) == (-1) ** n * bernoulli_poly_eval(n, x)


@given(st.integers(1, 30), small_q)
def test_bernoulli_difference(n, x):
    assert bernoulli_poly_eval(n, x + 1) - bernoulli_poly_eval(n, x) == n * x ** (n - 1)


@given(st.integers(0, 25), small_q)
def test_euler_reflection_and_coeffs(n, x):
    assert euler_poly_eval(n, 1 - x) == (-1) ** n * euler_poly_eval(n, x)
    assert euler_poly_eval(n, x) + euler_poly_eval(n, x + 1) == 2 * x ** n
    assert sum(c * x ** i for i, c in enumerate(euler_poly_coeffs(n))) == euler_poly_eval(n, x)


@given(small_q, st.integers(0, 10), st.integers(0, 10))
def test_pochhammer_split(a, m, n):
    assert pochhammer(a, m + n) == pochhammer(a, m) * pochhammer(a + m, n)


@given(st.lists(st.integers(0, 6), min_size=1, max_size=5))
def test_multinomial_symmetric(parts):
    t = sum(parts)
    assert multinomial(t, parts) == multinomial(t, list(reversed(parts)))
