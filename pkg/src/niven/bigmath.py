"""Exact rational kernel and rigorous enclosures of elementary constants.

Every real number that is not rational (e, pi, exp(x), sin(x), ...) is
represented by an :class:`Enclosure`: a closed interval with rational
endpoints that is guaranteed to contain it. No floating point is used on any
certified path.

The enclosing functions all share one output convention. A truncated series
is evaluated exactly, its remainder is bounded rigorously, and the result is
re-centred on a dyadic grid and padded to width exactly ``eps``. Because of
the padding, two enclosures of the same quantity at ``eps`` and ``eps2`` are
nested whenever ``eps2 <= 3/4 * eps``.
"""

from __future__ import annotations

import math
import re
import sys
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Callable, Tuple, Union

import gmpy2
from gmpy2 import mpz

from .errors import DomainError

Rational = Fraction
RationalLike = Union[int, Fraction]

__all__ = [
    "Rational",
    "Enclosure",
    "as_rational",
    "parse_rational",
    "format_rational",
    "int_to_str",
    "decimal_approx",
    "sci_approx",
    "str_to_int",
    "factorial",
    "binomial",
    "enclose_exp",
    "enclose_sin",
    "enclose_cos",
    "enclose_pi",
    "enclose_arctan_inv",
    "sin_over",
    "cos_over",
    "reduced_fraction",
    "hypergeometric_partial_sum",
    "fixed_sin_cos",
]


def as_rational(x) -> Fraction:
    """Coerce an int, Fraction or fraction string to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, _RationalABC):
        return Fraction(x.numerator, x.denominator)
    if isinstance(x, str):
        return parse_rational(x)
    raise TypeError(f"cannot treat {type(x).__name__} as an exact rational")


_POW_RE = re.compile(r"^\s*([+-]?\d+)\s*\^\s*([+-]?\d+)\s*$")
_SCI_RE = re.compile(r"^\s*[+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?\s*$")


def _parse_atom(text: str) -> Fraction:
    m = _POW_RE.match(text)
    if m:
        base, exp = int(m.group(1)), int(m.group(2))
        if base == 0 and exp < 0:
            raise ZeroDivisionError(f"{text!r} divides by zero")
        return Fraction(base) ** exp
    if _SCI_RE.match(text):
        # Fraction parses decimal and scientific strings exactly
        return Fraction(text.strip())
    raise ValueError(f"malformed rational {text!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"22/7"``, ``"1e-30"``, ``"1/10^30"``, ``"10^-30"`` or ``"0.25"``.

    Every accepted form maps to an exact rational; nothing passes through a
    float.
    """
    if not isinstance(text, str) or not text.strip():
        raise ValueError(f"malformed rational {text!r}")
    parts = text.split("/")
    if len(parts) == 1:
        return _parse_atom(parts[0])
    if len(parts) == 2:
        den = _parse_atom(parts[1])
        if den == 0:
            raise ZeroDivisionError(f"{text!r} has zero denominator")
        return _parse_atom(parts[0]) / den
    raise ValueError(f"malformed rational {text!r}")


def int_to_str(n: int) -> str:
    """Decimal string of an int of any size.

    CPython caps int/str conversion at a few thousand digits and converts in
    quadratic time; GMP has neither problem.
    """
    if -(10**15) < n < 10**15:
        return str(n)
    return mpz(n).digits(10)


def str_to_int(text: str) -> int:
    """Inverse of :func:`int_to_str`."""
    text = text.strip()
    if len(text) < 15:
        return int(text)
    if not re.fullmatch(r"[+-]?\d+", text):
        raise ValueError(f"not an integer: {text[:40]!r}")
    return int(mpz(text))


def reduced_fraction(num, den) -> Fraction:
    """num/den as a Fraction, reduced with GMP's gcd.

    Fraction's own normalisation uses CPython's quadratic gcd, which takes
    minutes on multi-million-bit operands.
    """
    num, den = mpz(num), mpz(den)
    if den == 0:
        raise ZeroDivisionError("zero denominator")
    if den < 0:
        num, den = -num, -den
    g = gmpy2.gcd(num, den)
    if g != 1:
        num, den = num // g, den // g
    out = Fraction.__new__(Fraction)
    # both slots are set before the object escapes; the pair is already reduced
    out._numerator, out._denominator = int(num), int(den)
    return out


def format_rational(x: RationalLike) -> str:
    """Canonical ``"num/den"`` string (always with an explicit denominator)."""
    x = as_rational(x)
    return f"{int_to_str(x.numerator)}/{int_to_str(x.denominator)}"


def decimal_approx(x: RationalLike, digits: int = 12) -> str:
    """Display-only decimal rendering of an exact rational, truncated toward zero."""
    x = as_rational(x)
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    whole, rem = divmod(num, den)
    frac = (rem * 10**digits) // den
    int_str = str(whole) if whole.bit_length() < 4000 else f"<{len(int_to_str(whole))}-digit integer>"
    if digits == 0:
        return sign + int_str
    return f"{sign}{int_str}.{frac:0{digits}d}"


def sci_approx(x: RationalLike, digits: int = 6) -> str:
    """Display-only scientific rendering, e.g. ``1.23456e-765``; truncated toward zero."""
    x = as_rational(x)
    if x == 0:
        return "0"
    sign = "-" if x < 0 else ""
    num, den = abs(x.numerator), x.denominator
    # exponent estimate from bit lengths, then correct by a step or two
    k = int((num.bit_length() - den.bit_length()) * 0.30102999566398120)
    while num * 10 ** max(-k, 0) < den * 10 ** max(k, 0):
        k -= 1
    while num * 10 ** max(-k - 1, 0) >= den * 10 ** max(k + 1, 0):
        k += 1
    shift = digits - 1 - k
    mant = (num * 10 ** max(shift, 0)) // (den * 10 ** max(-shift, 0))
    m = str(mant)
    body = m[0] + ("." + m[1:] if len(m) > 1 else "")
    return f"{sign}{body}e{k:+d}"


def factorial(n: int) -> int:
    """n! as an exact integer."""
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"factorial needs a nonnegative integer, got {n!r}")
    return int(gmpy2.fac(n))


def binomial(m: int, n: int) -> int:
    """C(m, n), zero when n > m."""
    if not isinstance(m, int) or not isinstance(n, int) or m < 0 or n < 0:
        raise DomainError(f"binomial needs nonnegative integers, got ({m!r}, {n!r})")
    return int(gmpy2.comb(m, n))


@dataclass(frozen=True)
class Enclosure:
    """Closed interval ``[lo, hi]`` with exact rational endpoints.

    Arithmetic returns an enclosure of the exact image set, so any chain of
    operations on enclosures stays sound. Plain ints and Fractions mix in as
    point intervals.
    """

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        lo, hi = as_rational(self.lo), as_rational(self.hi)
        if lo > hi:
            raise DomainError(f"empty enclosure [{lo}, {hi}]")
        object.__setattr__(self, "lo", lo)
        object.__setattr__(self, "hi", hi)

    @classmethod
    def point(cls, x: RationalLike) -> "Enclosure":
        x = as_rational(x)
        return cls(x, x)

    @classmethod
    def around(cls, center: RationalLike, radius: RationalLike) -> "Enclosure":
        center, radius = as_rational(center), as_rational(radius)
        if radius < 0:
            raise DomainError("negative radius")
        return cls(center - radius, center + radius)

    # -- measurements -------------------------------------------------------

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    @property
    def radius(self) -> Fraction:
        return self.width / 2

    def magnitude(self) -> Fraction:
        """Largest absolute value attained on the interval."""
        return max(abs(self.lo), abs(self.hi))

    def mignitude(self) -> Fraction:
        """Smallest absolute value attained on the interval."""
        if self.lo <= 0 <= self.hi:
            return Fraction(0)
        return min(abs(self.lo), abs(self.hi))

    def sign(self):
        """+1 or -1 when the sign is certified, 0 for the point 0, else None."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        if self.lo == self.hi == 0:
            return 0
        return None

    # -- predicates ---------------------------------------------------------

    def contains(self, x) -> bool:
        if isinstance(x, Enclosure):
            return self.lo <= x.lo and x.hi <= self.hi
        x = as_rational(x)
        return self.lo <= x <= self.hi

    __contains__ = contains

    def intersects(self, other: "Enclosure") -> bool:
        other = _coerce(other)
        return self.lo <= other.hi and other.lo <= self.hi

    def excludes_zero(self) -> bool:
        return self.lo > 0 or self.hi < 0

    def strictly_inside(self, a: RationalLike, b: RationalLike) -> bool:
        """True when the interval lies in the open interval ``(a, b)``."""
        return as_rational(a) < self.lo and self.hi < as_rational(b)

    # -- set operations -----------------------------------------------------

    def intersection(self, other: "Enclosure") -> "Enclosure":
        other = _coerce(other)
        if not self.intersects(other):
            raise DomainError("enclosures are disjoint")
        return Enclosure(max(self.lo, other.lo), min(self.hi, other.hi))

    def hull(self, other: "Enclosure") -> "Enclosure":
        other = _coerce(other)
        return Enclosure(min(self.lo, other.lo), max(self.hi, other.hi))

    # -- arithmetic ---------------------------------------------------------

    def __neg__(self):
        return Enclosure(-self.hi, -self.lo)

    def __pos__(self):
        return self

    def __abs__(self):
        return Enclosure(self.mignitude(), self.magnitude())

    def __add__(self, other):
        other = _coerce(other)
        return Enclosure(self.lo + other.lo, self.hi + other.hi)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        return Enclosure(self.lo - other.hi, self.hi - other.lo)

    def __rsub__(self, other):
        return _coerce(other) - self

    def __mul__(self, other):
        other = _coerce(other)
        if other.lo == other.hi:
            k = other.lo
            if k >= 0:
                return Enclosure(self.lo * k, self.hi * k)
            return Enclosure(self.hi * k, self.lo * k)
        products = (self.lo * other.lo, self.lo * other.hi, self.hi * other.lo, self.hi * other.hi)
        return Enclosure(min(products), max(products))

    __rmul__ = __mul__

    def reciprocal(self) -> "Enclosure":
        if not self.excludes_zero():
            raise DomainError(f"reciprocal of an enclosure containing 0: [{self.lo}, {self.hi}]")
        return Enclosure(1 / self.hi, 1 / self.lo)

    def __truediv__(self, other):
        return self * _coerce(other).reciprocal()

    def __rtruediv__(self, other):
        return _coerce(other) * self.reciprocal()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return (self ** (-k)).reciprocal()
        if k == 0:
            return Enclosure.point(1)
        lo_k, hi_k = self.lo**k, self.hi**k
        if k % 2 == 1 or self.lo >= 0:
            return Enclosure(lo_k, hi_k)
        if self.hi <= 0:
            return Enclosure(hi_k, lo_k)
        return Enclosure(Fraction(0), max(lo_k, hi_k))

    def __repr__(self):
        return f"Enclosure({format_rational(self.lo)}, {format_rational(self.hi)})"


def _coerce(x) -> Enclosure:
    if isinstance(x, Enclosure):
        return x
    return Enclosure.point(as_rational(x))


# ---------------------------------------------------------------------------
# Series machinery
# ---------------------------------------------------------------------------


def _check_eps(eps) -> Fraction:
    eps = as_rational(eps)
    if eps <= 0:
        raise DomainError(f"precision eps must be positive, got {eps}")
    return eps


def _finish(center: Fraction, err: Fraction, eps: Fraction) -> Enclosure:
    """Pad a certified ``center +- err`` to an enclosure of width exactly eps.

    Requires ``err <= eps/32``. The centre is first rounded to a dyadic grid
    of mesh at most eps/32 so endpoints stay compact.
    """
    budget = eps / 32
    if err > budget:
        raise AssertionError("internal error budget exceeded")
    # smallest k with 2^-k <= eps/32
    k = max(0, budget.denominator.bit_length() - budget.numerator.bit_length() + 1)
    while Fraction(1, 1 << k) > budget:
        k += 1
    scaled = center * (1 << k)
    c = Fraction(round(scaled), 1 << k)
    half = eps / 2
    return Enclosure(c - half, c + half)


def _first_small_term(x: Fraction, tol: Fraction, start: int, step: int = 1) -> int:
    """Smallest m >= start, m = start (mod step), with |x|^m / m! <= tol."""
    p, q = abs(x.numerator), x.denominator
    m = start
    num = p**m
    den = q**m * math.factorial(m)
    tn, td = tol.numerator, tol.denominator
    while num * td > tn * den:
        for _ in range(step):
            m += 1
            num *= p
            den *= q * m
    return m


def _exp_partial(x: Fraction, n_terms: int) -> Fraction:
    """sum_{k < n_terms} x^k / k!, exactly, by integer Horner evaluation."""
    if n_terms <= 0:
        return Fraction(0)
    p, q = x.numerator, x.denominator
    num, den = 1, 1
    for k in range(n_terms - 1, 0, -1):
        # v <- 1 + x/k * v
        num, den = k * q * den + p * num, k * q * den
    return Fraction(num, den)


def _sin_partial(x: Fraction, n_terms: int) -> Fraction:
    """sum_{k < n_terms} (-1)^k x^(2k+1) / (2k+1)!."""
    if n_terms <= 0:
        return Fraction(0)
    p, q = x.numerator, x.denominator
    p2, q2 = p * p, q * q
    num, den = 1, 1
    for k in range(n_terms - 1, 0, -1):
        d = (2 * k) * (2 * k + 1) * q2
        num, den = d * den - p2 * num, d * den
    return Fraction(num * p, den * q)


def _cos_partial(x: Fraction, n_terms: int) -> Fraction:
    """sum_{k < n_terms} (-1)^k x^(2k) / (2k)!."""
    if n_terms <= 0:
        return Fraction(0)
    p, q = x.numerator, x.denominator
    p2, q2 = p * p, q * q
    num, den = 1, 1
    for k in range(n_terms - 1, 0, -1):
        d = (2 * k - 1) * (2 * k) * q2
        num, den = d * den - p2 * num, d * den
    return Fraction(num, den)


def _bsplit(p: Callable[[int], int], q: Callable[[int], int], lo: int, hi: int):
    """(P, Q, T) with P = prod p(i), Q = prod q(i) over [lo, hi) and
    T / Q = sum_{k=lo}^{hi-1} prod_{i=lo}^{k} p(i)/q(i)."""
    if hi - lo <= 8:
        P = mpz(p(lo))
        Q = mpz(q(lo))
        T = P
        for i in range(lo + 1, hi):
            pi, qi = p(i), q(i)
            T = T * qi + P * pi
            P *= pi
            Q *= qi
        return P, Q, T
    mid = (lo + hi) // 2
    P1, Q1, T1 = _bsplit(p, q, lo, mid)
    P2, Q2, T2 = _bsplit(p, q, mid, hi)
    return P1 * P2, Q1 * Q2, T1 * Q2 + P1 * T2


def hypergeometric_partial_sum(p: Callable[[int], int], q: Callable[[int], int], n_terms: int) -> Tuple[mpz, mpz]:
    """sum_{k=0}^{n_terms-1} prod_{i=1}^{k} p(i)/q(i) as an unreduced (num, den) pair.

    Binary splitting: the cost is a few multiplications of full-size
    numbers per level instead of one full-size operation per term.
    """
    if n_terms <= 1:
        return mpz(n_terms), mpz(1)
    _, Q, T = _bsplit(p, q, 1, n_terms)
    return Q + T, Q


def _log2_term(ax: float, m: int) -> float:
    return m * math.log2(ax) - math.lgamma(m + 1) / math.log(2)


def _omitted_index(x: Fraction, bits: int, parity: int) -> int:
    """Smallest m = parity (mod 2), m >= |x|, with |x|^m / m! <= 2^-bits.

    A float estimate picks the starting point; the inequality itself is
    checked exactly.
    """
    ax = abs(x)
    m = max(parity, math.ceil(ax))
    if ax > 0:
        fx = float(ax)
        # the float log-term decreases for m >= |x|: gallop, then bisect
        lo, step = m, 1
        while _log2_term(fx, lo + step) > -bits - 2:
            step *= 2
        hi = lo + step
        while lo < hi:
            mid = (lo + hi) // 2
            if _log2_term(fx, mid) > -bits - 2:
                lo = mid + 1
            else:
                hi = mid
        m = max(m, lo - 2)
    if m % 2 != parity:
        m += 1
    p, q = mpz(abs(x.numerator)), mpz(x.denominator)
    while (p**m) << bits > q**m * gmpy2.fac(m):
        m += 2
    return m


def _fixed_series(x: Fraction, bits: int, parity: int):
    """Integer interval of width 3 around 2^bits sin x (parity 1) or cos x (parity 0)."""
    p, q = mpz(x.numerator), mpz(x.denominator)
    p2, q2 = p * p, q * q
    m = _omitted_index(x, bits, parity)
    if parity:
        num, den = hypergeometric_partial_sum(lambda i: -p2, lambda i: q2 * (2 * i) * (2 * i + 1), (m - 1) // 2)
        num, den = num * p, den * q
    else:
        num, den = hypergeometric_partial_sum(lambda i: -p2, lambda i: q2 * (2 * i - 1) * (2 * i), m // 2)
    fl = (num << bits) // den
    return int(fl - 1), int(fl + 2)


def fixed_sin_cos(x: RationalLike, bits: int):
    """Integer intervals bracketing 2^bits sin x and 2^bits cos x.

    Returns ``((s_lo, s_hi), (c_lo, c_hi))`` with widths of 3 units. Both
    series are summed exactly by binary splitting; the alternating tail is
    at most one unit and the final floor loses less than one.
    """
    x = as_rational(x)
    if not isinstance(bits, int) or bits < 0:
        raise DomainError("bits must be a nonnegative integer")
    return _fixed_series(x, bits, 1), _fixed_series(x, bits, 0)


# number of series terms above which sin/cos switch to binary splitting
_SPLIT_THRESHOLD = 200


def _fixed_enclosure(fixed, bits: int, eps: Fraction) -> Enclosure:
    lo, hi = fixed
    center = Fraction(lo + hi, 2 << bits)
    err = Fraction(hi - lo, 2 << bits)
    return _finish(center, err, eps)


def _bits_for(tol: Fraction) -> int:
    """Smallest b with 2^-b <= tol."""
    b = max(0, tol.denominator.bit_length() - tol.numerator.bit_length())
    while Fraction(1, 1 << b) > tol:
        b += 1
    return b


def enclose_exp(x: RationalLike, eps: RationalLike) -> Enclosure:
    """Enclosure of exp(x) of width ``eps``.

    The Taylor series is cut at N terms with N >= 2|x|, so every omitted
    term is at most half the previous one and the tail is bounded by twice
    the first omitted term.
    """
    x, eps = as_rational(x), _check_eps(eps)
    tail_budget = eps / 64
    start = max(1, math.ceil(2 * abs(x)))
    n_terms = _first_small_term(x, tail_budget / 2, start)
    tail = 2 * abs(x) ** n_terms / math.factorial(n_terms)
    return _finish(_exp_partial(x, n_terms), tail, eps)


def enclose_sin(x: RationalLike, eps: RationalLike) -> Enclosure:
    """Enclosure of sin(x) of width ``eps`` from the alternating Taylor series.

    Truncation happens only once the omitted term index m satisfies
    m >= |x|, past which term magnitudes decrease, so the first omitted term
    bounds the remainder.
    """
    x, eps = as_rational(x), _check_eps(eps)
    if x == 0:
        return _finish(Fraction(0), Fraction(0), eps)
    # first omitted term has odd index m = 2K + 1
    start = max(1, math.ceil(abs(x)))
    if start % 2 == 0:
        start += 1
    bits = _bits_for(eps / 128)
    if _omitted_index(x, bits, 1) > 2 * _SPLIT_THRESHOLD:
        return _fixed_enclosure(_fixed_series(x, bits, 1), bits, eps)
    m = _first_small_term(x, eps / 64, start, step=2)
    n_terms = (m - 1) // 2
    tail = abs(x) ** m / math.factorial(m)
    return _finish(_sin_partial(x, n_terms), tail, eps)


def enclose_cos(x: RationalLike, eps: RationalLike) -> Enclosure:
    """Enclosure of cos(x) of width ``eps``; see :func:`enclose_sin`."""
    x, eps = as_rational(x), _check_eps(eps)
    if x == 0:
        return _finish(Fraction(1), Fraction(0), eps)
    start = max(2, math.ceil(abs(x)))
    if start % 2 == 1:
        start += 1
    bits = _bits_for(eps / 128)
    if _omitted_index(x, bits, 0) > 2 * _SPLIT_THRESHOLD:
        return _fixed_enclosure(_fixed_series(x, bits, 0), bits, eps)
    m = _first_small_term(x, eps / 64, start, step=2)
    n_terms = m // 2
    tail = abs(x) ** m / math.factorial(m)
    return _finish(_cos_partial(x, n_terms), tail, eps)


def _arctan_inv_fixed(m: int, bits: int, tol: Fraction):
    """arctan(1/m) scaled by 2^bits as an integer, with a certified error.

    Returns ``(value, err)`` where ``|arctan(1/m) * 2^bits - value| <= err``.
    Each term is floored once (error < 1 unit), and the alternating series
    is cut when the first omitted term is below ``tol``.
    """
    one = 1 << bits
    total = 0
    k = 0
    power = m  # m^(2k+1)
    while True:
        if Fraction(1, (2 * k + 1) * power) <= tol:
            break
        term = one // ((2 * k + 1) * power)
        total += -term if k % 2 else term
        k += 1
        power *= m * m
    # k floored terms plus the omitted tail
    err = Fraction(k) + tol * one
    return total, err


def enclose_arctan_inv(m: int, eps: RationalLike) -> Enclosure:
    """Enclosure of arctan(1/m) for an integer m >= 2, width ``eps``."""
    eps = _check_eps(eps)
    if not isinstance(m, int) or m < 2:
        raise DomainError("arctan(1/m) needs an integer m >= 2")
    center, err = _machin_parts([(1, m)], eps)
    return _finish(center, err, eps)


def _machin_parts(terms, eps: Fraction):
    """Weighted sum of arctan(1/m) values with a total error <= eps/32."""
    budget = eps / 32
    weight = sum(abs(w) for w, _ in terms)
    per_term = budget / (2 * weight)
    bits = 8
    while Fraction(1, 1 << bits) * 64 > per_term:
        bits += 1
    bits += 16  # headroom for the per-term floor errors
    one = 1 << bits
    center = Fraction(0)
    err = Fraction(0)
    for w, m in terms:
        val, e = _arctan_inv_fixed(m, bits, per_term / 2)
        center += w * Fraction(val, one)
        err += abs(w) * e / one
    return center, err


def _raw_pi(eps: Fraction) -> Enclosure:
    center, err = _machin_parts([(16, 5), (-4, 239)], eps)
    return _finish(center, err, eps)


_PI_ANCHOR = _raw_pi(Fraction(1, 1024))


def enclose_pi(eps: RationalLike) -> Enclosure:
    """Enclosure of pi of width at most ``eps`` via pi = 16 arctan(1/5) - 4 arctan(1/239).

    Coarse requests are clipped to a fixed 2^-10 enclosure so they stay
    within [3, 4]; clipping by a fixed set keeps the nesting property.
    """
    eps = _check_eps(eps)
    return _raw_pi(eps).intersection(_PI_ANCHOR)


def sin_over(x: Enclosure, eps: RationalLike) -> Enclosure:
    """Enclosure of sin over a whole interval (|sin'| <= 1 gives the spread)."""
    x = _coerce(x)
    mid = enclose_sin(x.midpoint, eps)
    out = Enclosure(mid.lo - x.radius, mid.hi + x.radius)
    return out.intersection(Enclosure(-1, 1))


def cos_over(x: Enclosure, eps: RationalLike) -> Enclosure:
    """Enclosure of cos over a whole interval."""
    x = _coerce(x)
    mid = enclose_cos(x.midpoint, eps)
    out = Enclosure(mid.lo - x.radius, mid.hi + x.radius)
    return out.intersection(Enclosure(-1, 1))
