"""Exact identity suite: every registered identity vanishes; printed variants are caught."""
from __future__ import annotations

import mpmath
import pytest
from hypothesis import given, strategies as st

from zetarec.exact import PiPoly
from zetarec.identities import (PRINTED_VARIANTS, check_exact, conjecture1_scan, identity_tags, run_suite,
                                z3_poly)
from zetarec.verdict import EXACT_PASS, FAIL, INDETERMINATE, PASS

TAGS = identity_tags()


@pytest.mark.parametrize("tag", TAGS)
def test_identity_small_range(tag):
    lo = 0 if tag in ("thm6_gosper", "lehmer_6k", "lehmer_6k2", "prop2") or tag.startswith("prop3_") else 1
    hi = 3 if tag == "prop1_hurwitz" else lo + 5
    for v in run_suite(tag, range(lo, hi + 1)):
        assert v.status == EXACT_PASS, (tag, v.params, str(v.residual))
        assert isinstance(v.residual, PiPoly) and v.residual.is_zero()


@given(st.sampled_from([t for t in TAGS if t != "prop1_hurwitz"]), st.integers(1, 25))
def test_identity_property(tag, n):
    assert check_exact(tag, n).status == EXACT_PASS


@pytest.mark.parametrize("tag", sorted(PRINTED_VARIANTS))
def test_printed_variants_fail_somewhere(tag):
    lo = PRINTED_VARIANTS[tag].min_param
    verdicts = run_suite(tag, range(lo, lo + 8))
    assert any(v.status == FAIL for v in verdicts)


def test_thm2a_generic_j():
    for j in (2, 3, 5):
        assert check_exact("thm2a", (4, j)).status == EXACT_PASS


def test_parameter_validation():
    with pytest.raises(ValueError):
        check_exact("thm1a", 0)
    with pytest.raises(ValueError):
        check_exact("prop1_hurwitz", 4)
    with pytest.raises(KeyError):
        check_exact("no_such_identity", 1)
    with pytest.raises(ValueError):
        run_suite("thm1a", [])


def test_conjecture_scan_is_report_only():
    rows = conjecture1_scan(range(4, 9), "2s", 30)
    assert [r.s for r in rows] == [4, 5, 6, 7, 8]
    assert all(r.status in (PASS, FAIL, INDETERMINATE) for r in rows)
    for r in rows:
        if r.holds is not None:
            assert r.holds == (r.lower <= r.z_value <= r.upper)
    with pytest.raises(ValueError):
        conjecture1_scan([3])
    with pytest.raises(ValueError):
        conjecture1_scan([4], "3s")


def test_z3_poly_is_finite():
    assert mpmath.isfinite(z3_poly(5, mpmath.zeta(10), 30))
