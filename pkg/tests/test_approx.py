from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from niven.approx import cf_convergents, cf_digits, er_convergent, er_error_table
from niven.bigmath import Enclosure, enclose_exp, enclose_pi
from niven.errors import DegenerateApproximantError, DomainError, IndeterminateError
from niven.foperator import enclose_integral_series, exp_integral_exact
from niven.polycore import niven_poly

mpmath.mp.dps = 60


def _euclid_digits(x: Fraction, k: int):
    """Oracle: continued-fraction digits of an exact rational."""
    out = []
    while len(out) < k:
        a = x.numerator // x.denominator
        out.append(a)
        if x == a:
            break
        x = 1 / (x - a)
    return out


def test_convergent_examples():
    assert er_convergent(1, 1) == 3
    assert er_convergent(1, 2) == Fraction(19, 7)
    for r in (1, 2, 5):
        assert er_convergent(r, 0) == 1


def test_degenerate_row_is_flagged():
    # f = x(2 - x): F = f - f' + f'' = -(x - 2)^2, so F(2) = 0
    with pytest.raises(DegenerateApproximantError):
        er_convergent(2, 1)
    rows = er_error_table(2, 3, Fraction(1, 10**10))
    assert [row.n for row in rows] == [0, 1, 2, 3]
    assert rows[1].degenerate and rows[1].approximant is None
    assert rows[1].to_dict()["degenerate"] is True
    assert not rows[2].degenerate


def test_error_table_r1():
    eps = Fraction(1, 10**10)
    rows = er_error_table(1, 2, eps)
    assert all(row.error.width <= eps for row in rows)
    assert Fraction(28, 100) < abs(rows[1].error.midpoint) < Fraction(29, 100)
    assert 0 < rows[2].error.lo and rows[2].error.hi < Fraction(5, 1000)


def test_errors_shrink_for_r1():
    rows = er_error_table(1, 6, Fraction(1, 10**30))
    mags = [abs(row.error.midpoint) for row in rows if not row.degenerate]
    assert all(b < a for a, b in zip(mags, mags[1:]))


@pytest.mark.parametrize("r", [1, 2, 3])
def test_error_within_bound(r):
    for row in er_error_table(r, 8, Fraction(1, 10**30)):
        if row.degenerate:
            continue
        err = abs(row.error)
        assert 0 <= err.lo and err.hi <= row.bound
        # oracle: mpmath value of e^r
        approx = mpmath.mpf(row.approximant.numerator) / row.approximant.denominator
        assert abs(mpmath.exp(r) - approx) <= mpmath.mpf(row.bound.numerator) / row.bound.denominator


@pytest.mark.parametrize("r", [1, 2])
@pytest.mark.parametrize("n", range(7))
def test_row_identity_matches_series(r, n):
    eps = Fraction(1, 10**25)
    form = exp_integral_exact(niven_poly(r, 1, n), r)
    series = enclose_integral_series(niven_poly(r, 1, n), r, "exp", eps)
    assert form.enclose(eps).intersects(series)


def test_validation():
    with pytest.raises(DomainError):
        er_convergent(0, 1)
    with pytest.raises(DomainError):
        er_error_table(1, -1, Fraction(1, 10))
    with pytest.raises(DomainError):
        er_error_table(1, 2, 0)


# --- continued fractions -----------------------------------------------


def test_e_and_pi_convergents():
    e = enclose_exp(1, Fraction(1, 10**30))
    assert cf_convergents(e, 4) == [2, 3, Fraction(8, 3), Fraction(11, 4)]
    assert cf_digits(e, 4) == [2, 1, 2, 1]
    assert Fraction(19, 7) in cf_convergents(e, 6)
    assert er_convergent(1, 2) in cf_convergents(e, 6)
    pi = enclose_pi(Fraction(1, 10**30))
    assert cf_convergents(pi, 2) == [3, Fraction(22, 7)]


def test_point_enclosure_terminates():
    x = Enclosure.point(Fraction(355, 113))
    assert cf_convergents(x, 10) == [3, Fraction(22, 7), Fraction(355, 113)]


def test_wide_enclosure_is_indeterminate():
    with pytest.raises(IndeterminateError):
        cf_digits(Enclosure(Fraction(5, 2), Fraction(7, 2)), 1)
    e = enclose_exp(1, Fraction(1, 100))
    with pytest.raises(IndeterminateError):
        cf_digits(e, 20)


@given(st.fractions(min_value=0, max_value=50).filter(lambda x: x > 0), st.integers(1, 12))
def test_point_digits_match_euclid(x, k):
    assert cf_digits(Enclosure.point(x), k) == _euclid_digits(x, k)


@given(st.integers(1, 4))
def test_exp_digits_match_high_precision_rational(r):
    # 50-digit rational approximation of e^r as an independent reference
    ref = Fraction(mpmath.nstr(mpmath.exp(r), 55))
    digits = cf_digits(enclose_exp(r, Fraction(1, 10**40)), 12)
    assert digits == _euclid_digits(ref, 12)
