"""Eisenstein series, lattice invariants, Hurwitz numbers and the lattice Dirichlet series."""
from __future__ import annotations

from fractions import Fraction as F

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from zetarec import lattice as L
from zetarec.verdict import EXACT_PASS

P = 30
TOL = mpmath.mpf(10) ** -(P - 5)

HURWITZ = {4: F(1, 10), 8: F(3, 10), 12: F(567, 130), 16: F(43659, 170), 20: F(392931, 10),
           24: F(1724574159, 130)}


def test_omega_oracles():
    with mpmath.workdps(40):
        assert mpmath.nstr(L.lemniscate_omega(30), 12) == "2.62205755429"
        assert mpmath.nstr(L.equianharmonic_omega(30), 12) == "1.52995403706"


def test_fundamental_region():
    assert L.in_fundamental_region(mpmath.mpc(0, 1))
    assert L.in_fundamental_region(mpmath.expjpi(mpmath.mpf(1) / 3))
    assert not L.in_fundamental_region(mpmath.mpc(0, 0.5))
    assert not L.in_fundamental_region(mpmath.mpc(0.7, 2))
    with pytest.raises(ValueError):
        L.eisenstein(4, "0.1+0.5i", dps=P)
    with pytest.raises(ValueError):
        L.LatticeTau("bad", mpmath.mpc(0, 1), 0)


def test_parse_tau():
    assert L.parse_tau("i") == mpmath.mpc(0, 1)
    assert L.parse_tau("0.3+1.2i") == mpmath.mpc("0.3", "1.2")


@pytest.mark.parametrize("order", [4, 8])
@pytest.mark.parametrize("tau", ["i", "rho", "0.3+1.2i"])
def test_eisenstein_methods_agree(order, tau):
    assert L.check_eisenstein_agreement(order, tau, P).ok


def test_eisenstein_vanishing_orders():
    with mpmath.workdps(P + 15):
        assert abs(L.eisenstein(6, "i", dps=P).value) < TOL
        assert abs(L.eisenstein(4, "rho", dps=P).value) < TOL
        brute = mpmath.nsum(lambda m, n: 0 if m == n == 0 else (m + n * 1j) ** -8, [-40, 40], [-40, 40])
        assert abs(L.eisenstein(8, "i", dps=P).value - brute) < mpmath.mpf(10) ** -10


def test_invariants():
    sq = L.invariants_g2_g3(L.square_lattice(P), P)
    assert abs(sq.g2 - 4) < TOL and abs(sq.g3) < TOL and abs(sq.j - 1728) < mpmath.mpf(10) ** -(P - 8)
    eq = L.invariants_g2_g3(L.equianharmonic_lattice(P), P)
    assert abs(eq.g2) < TOL and abs(eq.g3 - 1) < TOL and abs(eq.j) < TOL
    assert L.check_invariants("square", P).ok and L.check_invariants("equianharmonic", P).ok


def test_wp_laurent():
    c = L.wp_laurent_exact(4, 0, 6)
    assert c[2] == F(1, 5) and c[3] == 0 and c[4] == F(1, 75)
    assert L.wp_laurent_exact(0, 1, 6)[6] == F(1, 10192)
    num = L.wp_laurent_integral(L.square_lattice(P), 3, P)
    with mpmath.workdps(P + 15):
        assert abs(num[1] - F(1, 5).numerator / mpmath.mpf(5)) < TOL
        assert abs(num[3] - mpmath.mpf(1) / 75) < TOL


@pytest.mark.parametrize("order, value", sorted(HURWITZ.items()))
def test_hurwitz_oracle(order, value):
    assert L.hurwitz_number_exact(order) == value


@given(st.integers(1, 200).filter(lambda k: k % 4))
def test_hurwitz_zero_unless_multiple_of_4(k):
    assert L.hurwitz_number_exact(k) == 0


@pytest.mark.parametrize("method", ["integral_thm14", "series_thm16", "recurrence_thm15"])
def test_hurwitz_methods(method):
    for order in (4, 8, 12):
        assert L.check_hurwitz(order, method, P).ok


def test_hurwitz_integral_zero_order():
    with mpmath.workdps(P + 15):
        assert abs(L.hurwitz_number(6, "integral_thm14", P)) < TOL


def test_hurwitz_cosine_sum_within_estimate():
    v, est = L.hurwitz_cosine_sum(4, 40, P)
    with mpmath.workdps(P + 15):
        assert abs(v - mpmath.mpf(1) / 10) < 2 * est + TOL
    assert L.check_hurwitz(8, "cosine_cor6", P).ok


def test_thm15():
    for n in (1, 2, 3):
        assert L.check_theorem15(n, P).ok


def test_asymptotic_ratios_decrease():
    rows = L.hurwitz_asymptotic_table(10, P)
    gaps = [abs(r[2] - 1) for r in rows[3:]]
    assert all(a > b for a, b in zip(gaps, gaps[1:]))
    with pytest.raises(ValueError):
        L.hurwitz_asymptotic(6)


def test_lemma2():
    assert L.lemma2_check(P).ok


@pytest.mark.parametrize("order", [6, 12])
def test_equianharmonic(order):
    assert L.check_equianharmonic(order, P).ok


def test_equianharmonic_table_switches():
    rows = L.equianharmonic_asymptotic_table(6, P)
    assert [r["closer"] for r in rows] == ["-1/18"] * 4 + ["-1/27"] * 2
    with mpmath.workdps(P + 15):
        assert mpmath.nstr(rows[0]["S"], 6) == "5.86303"


def test_thm11_cases():
    assert L.check_theorem11(2, F(1), "i", P).ok
    assert L.check_theorem11(3, F(1), "rho", P).ok


def test_lattice_dirichlet_trivial_character():
    # G(2s) with trivial character on the square lattice is 4 zeta(s) beta(s)
    r = L.lattice_dirichlet_G(3, 0, 0, mpmath.mpc(0, 1), 12, P)
    with mpmath.workdps(P + 15):
        beta3 = mpmath.pi ** 3 / 32
        assert abs(r.value - 4 * mpmath.zeta(3) * beta3) <= r.tail_bound + TOL


@settings(max_examples=5)
@given(st.sampled_from(["alternating", "quarter"]), st.sampled_from([2, 3]))
def test_thm13(chi, j):
    assert L.check_theorem13(j, F(1), chi, 8, dps=P).ok
