from fractions import Fraction

import mpmath
import pytest
from hypothesis import given
from hypothesis import strategies as st

from niven.bigmath import (
    Enclosure,
    binomial,
    decimal_approx,
    enclose_arctan_inv,
    enclose_cos,
    enclose_exp,
    enclose_pi,
    enclose_sin,
    factorial,
    fixed_sin_cos,
    format_rational,
    hypergeometric_partial_sum,
    int_to_str,
    parse_rational,
    reduced_fraction,
    sci_approx,
    str_to_int,
)
from niven.errors import DomainError

mpmath.mp.dps = 80
ORACLE_SLACK = Fraction(1, 10**70)


def _mp(x):
    return mpmath.mpf(x.numerator) / x.denominator


def _hits(enc: Enclosure, value) -> bool:
    """Does enc meet [value - slack, value + slack]? value is an mpf."""
    v = Fraction(mpmath.nstr(mpmath.mpf(value), 75))
    return enc.intersects(Enclosure(v - ORACLE_SLACK, v + ORACLE_SLACK))


rationals = st.fractions(min_value=-5, max_value=5, max_denominator=50)


# --- integer kernel -------------------------------------------------------


def _factorial_oracle(n):
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _pascal(rows):
    tri = [[1]]
    for m in range(1, rows):
        prev = tri[-1]
        tri.append([1] + [prev[i - 1] + prev[i] for i in range(1, m)] + [1])
    return tri


def test_factorial_examples():
    assert factorial(0) == 1
    assert factorial(5) == 120
    assert factorial(20) == _factorial_oracle(20) == 2432902008176640000


def test_factorial_rejects_negative():
    with pytest.raises(DomainError):
        factorial(-1)


def test_binomial_matches_pascal_triangle():
    tri = _pascal(30)
    for m in range(30):
        for n in range(m + 3):
            expected = tri[m][n] if n <= m else 0
            assert binomial(m, n) == expected
    assert binomial(10, 5) == 252
    assert binomial(4, 2) == 6


@given(st.integers(0, 300))
def test_factorial_recurrence(n):
    assert factorial(n + 1) == (n + 1) * factorial(n)


@given(st.integers(1, 200), st.integers(1, 200))
def test_pascal_rule(m, n):
    assert binomial(m, n) == binomial(m - 1, n - 1) + binomial(m - 1, n)


# --- parsing / formatting -------------------------------------------------


@pytest.mark.parametrize(
    "text,value",
    [
        ("22/7", Fraction(22, 7)),
        ("1e-30", Fraction(1, 10**30)),
        ("1/10^30", Fraction(1, 10**30)),
        ("10^-30", Fraction(1, 10**30)),
        ("0.25", Fraction(1, 4)),
        ("-3", Fraction(-3)),
        ("2.5e3", Fraction(2500)),
    ],
)
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("bad", ["", "abc", "1/0", "1//2", "e5"])
def test_parse_rational_rejects(bad):
    with pytest.raises((ValueError, ZeroDivisionError)):
        parse_rational(bad)


def test_format_rational_always_has_denominator():
    assert format_rational(3) == "3/1"
    assert format_rational(Fraction(-6, 4)) == "-3/2"


def test_big_int_strings_round_trip():
    n = 7**20000  # well past the default int/str digit limit
    assert str_to_int(int_to_str(n)) == n
    assert int_to_str(n).endswith("1")  # 7^4 = 2401, so 7^20000 = ...1
    assert len(int_to_str(n)) == 16902


def test_display_helpers():
    assert decimal_approx(Fraction(22, 7), 5) == "3.14285"
    assert decimal_approx(Fraction(-1, 3), 3) == "-0.333"
    assert sci_approx(Fraction(1, 10**800)) == "1.00000e-800"
    assert sci_approx(Fraction(-22, 7)) == "-3.14285e+0"
    assert sci_approx(0) == "0"


# --- enclosure arithmetic -------------------------------------------------


def test_enclosure_rejects_inverted():
    with pytest.raises(DomainError):
        Enclosure(1, 0)


encl = st.tuples(rationals, rationals).map(lambda t: Enclosure(min(t), max(t)))


@given(encl, encl, st.floats(0, 1), st.floats(0, 1))
def test_arithmetic_contains_images(a, b, s, t):
    # sample points by rational interpolation between endpoints
    x = a.lo + (a.hi - a.lo) * Fraction(s)
    y = b.lo + (b.hi - b.lo) * Fraction(t)
    assert x + y in a + b
    assert x - y in a - b
    assert x * y in a * b
    assert -x in -a
    assert x**3 in a**3
    assert x**2 in a**2
    if b.excludes_zero():
        assert x / y in a / b


def test_even_power_is_nonnegative():
    e = Enclosure(-2, 1) ** 2
    assert e.lo == 0 and e.hi == 4


def test_reciprocal_of_interval_with_zero_fails():
    with pytest.raises(DomainError):
        Enclosure(-1, 1).reciprocal()


def test_sign_and_predicates():
    assert Enclosure(1, 2).sign() == 1
    assert Enclosure(-2, -1).sign() == -1
    assert Enclosure.point(0).sign() == 0
    assert Enclosure(-1, 1).sign() is None
    assert Enclosure(Fraction(1, 3), Fraction(1, 2)).strictly_inside(0, 1)
    assert not Enclosure(0, Fraction(1, 2)).strictly_inside(0, 1)


# --- elementary functions -------------------------------------------------


def test_exp_examples():
    e0 = enclose_exp(0, Fraction(1, 10**5))
    assert 1 in e0 and e0.width <= Fraction(1, 10**5)
    e1 = enclose_exp(1, Fraction(1, 10**20))
    assert e1.width <= Fraction(1, 10**20)
    assert _hits(e1, mpmath.e)
    eps = Fraction(1, 10**10)
    prod = enclose_exp(-1, eps) * enclose_exp(1, eps)
    assert 1 in prod


@given(rationals, st.sampled_from([Fraction(1, 10**5), Fraction(1, 10**20)]))
def test_exp_sound_and_nested(x, eps):
    wide = enclose_exp(x, eps)
    tight = enclose_exp(x, eps / 1000)
    assert wide.width <= eps and tight.width <= eps / 1000
    assert tight.width < wide.width
    assert wide.lo <= tight.lo and tight.hi <= wide.hi
    assert _hits(tight, mpmath.exp(_mp(x)))


@given(rationals)
def test_exp_reciprocal_identity(x):
    eps = Fraction(1, 10**25)
    assert 1 in enclose_exp(x, eps) * enclose_exp(-x, eps)


@given(rationals, st.sampled_from([Fraction(1, 10**8), Fraction(1, 10**30)]))
def test_sin_cos_against_mpmath(x, eps):
    s, c = enclose_sin(x, eps), enclose_cos(x, eps)
    assert s.width <= eps and c.width <= eps
    assert _hits(s, mpmath.sin(_mp(x)))
    assert _hits(c, mpmath.cos(_mp(x)))
    assert 1 in s**2 + c**2


def test_sin_of_22_over_7_is_small_negative():
    s = enclose_sin(Fraction(22, 7), Fraction(1, 10**30))
    assert s.sign() == -1
    assert s.hi > Fraction(-1, 100)
    assert 0 in enclose_sin(0, Fraction(1, 100))


def test_pi_enclosures():
    coarse = enclose_pi(1)
    assert 3 <= coarse.lo and coarse.hi <= 4
    fine = enclose_pi(Fraction(1, 10**50))
    assert fine.width <= Fraction(1, 10**50)
    assert _hits(fine, mpmath.pi)
    assert fine.lo <= coarse.hi and coarse.lo <= fine.hi


def test_pi_consistency_with_sine():
    eps = Fraction(1, 10**30)
    p = enclose_pi(eps)
    lo, hi = enclose_sin(p.lo, eps), enclose_sin(p.hi, eps)
    assert lo.hull(hi).contains(0)


def test_arctan_inverse_against_mpmath():
    for m in (2, 5, 239):
        enc = enclose_arctan_inv(m, Fraction(1, 10**40))
        assert _hits(enc, mpmath.atan(mpmath.mpf(1) / m))


@pytest.mark.parametrize("fn", [enclose_exp, enclose_sin, enclose_cos])
def test_nonpositive_eps_rejected(fn):
    with pytest.raises(DomainError):
        fn(1, 0)
    with pytest.raises(DomainError):
        enclose_pi(-1)


# --- fast-path helpers ----------------------------------------------------


@given(st.integers(-(10**40), 10**40), st.integers(1, 10**40))
def test_reduced_fraction_matches_fraction(num, den):
    r = reduced_fraction(num, den)
    assert r == Fraction(num, den)
    assert (r.numerator, r.denominator) == (Fraction(num, den).numerator, Fraction(num, den).denominator)
    assert type(r.numerator) is int and type(r.denominator) is int
    assert reduced_fraction(num, -den) == Fraction(num, -den)


def test_reduced_fraction_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        reduced_fraction(1, 0)


@given(st.integers(-20, 20), st.integers(1, 20), st.integers(0, 60))
def test_hypergeometric_sum_matches_term_loop(c, d, n_terms):
    # terms t_k = prod_{i<=k} (c + i) / (d i), summed naively
    p = lambda i: c + i  # noqa: E731
    q = lambda i: d * i  # noqa: E731
    num, den = hypergeometric_partial_sum(p, q, n_terms)
    total, term = Fraction(0), Fraction(1)
    for k in range(n_terms):
        if k:
            term *= Fraction(p(k), q(k))
        total += term
    assert Fraction(int(num), int(den)) == total


@given(st.fractions(min_value=-40, max_value=40, max_denominator=200), st.sampled_from([0, 5, 64, 300, 2000]))
def test_fixed_sin_cos_brackets(x, bits):
    (s_lo, s_hi), (c_lo, c_hi) = fixed_sin_cos(x, bits)
    assert s_hi - s_lo <= 3 and c_hi - c_lo <= 3
    scale = mpmath.mpf(2) ** bits
    with mpmath.workdps(bits // 3 + 40):
        s, c = mpmath.sin(_mp(x)) * scale, mpmath.cos(_mp(x)) * scale
        assert s_lo <= s <= s_hi
        assert c_lo <= c <= c_hi


@pytest.mark.parametrize("x", [Fraction(355, 113), Fraction(22, 7), Fraction(-7, 3), Fraction(1, 10**6)])
def test_fixed_sin_cos_agrees_with_horner_route(x):
    bits = 4000
    (s_lo, s_hi), (c_lo, c_hi) = fixed_sin_cos(x, bits)
    eps = Fraction(1, 2**bits)
    s, c = enclose_sin(x, eps), enclose_cos(x, eps)
    assert s.intersects(Enclosure(Fraction(s_lo, 2**bits), Fraction(s_hi, 2**bits)))
    assert c.intersects(Enclosure(Fraction(c_lo, 2**bits), Fraction(c_hi, 2**bits)))
