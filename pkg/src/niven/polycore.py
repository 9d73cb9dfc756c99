"""Dense univariate polynomials over the integers and the rationals.

Coefficients are stored low-to-high: ``coeffs[k]`` multiplies ``x**k``. The
zero polynomial has no coefficients and degree ``None``. An
:class:`IntPoly` is a :class:`RatPoly` whose coefficients are Python ints;
arithmetic results are returned as ``IntPoly`` whenever every coefficient is
integral, so integrality is visible in the type.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Optional

from .bigmath import Enclosure, as_rational, binomial, factorial
from .errors import DomainError, InvariantError

__all__ = [
    "RatPoly",
    "IntPoly",
    "derivative",
    "nth_derivative",
    "nth_derivative_div_factorial",
    "affine_substitute",
    "niven_poly",
    "eval_rational",
    "eval_enclosure",
    "antiderivative",
    "integrate_poly_exact",
    "abs_bound_on",
]


def _integral_value(c) -> Optional[int]:
    if isinstance(c, int):
        return c
    if c.denominator == 1:
        return c.numerator
    return None


def _strip(cs: list) -> list:
    while cs and cs[-1] == 0:
        cs.pop()
    return cs


def _build(coeffs: Iterable) -> "RatPoly":
    """Wrap raw coefficients in the narrowest polynomial type."""
    cs = _strip(list(coeffs))
    ints = []
    for c in cs:
        v = _integral_value(c)
        if v is None:
            return RatPoly._raw(tuple(as_rational(c) for c in cs))
        ints.append(v)
    return IntPoly._raw(tuple(ints))


class RatPoly:
    """Polynomial with exact rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        self.coeffs = tuple(_strip([self._coerce(c) for c in coeffs]))

    @staticmethod
    def _coerce(c):
        return as_rational(c)

    @classmethod
    def _raw(cls, coeffs: tuple):
        obj = object.__new__(cls)
        obj.coeffs = coeffs
        return obj

    @classmethod
    def monomial(cls, k: int, c=1) -> "RatPoly":
        if k < 0:
            raise DomainError("monomial degree must be nonnegative")
        return _build([0] * k + [c])

    @classmethod
    def constant(cls, c) -> "RatPoly":
        return _build([c])

    @property
    def degree(self) -> Optional[int]:
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_integral(self) -> bool:
        return all(_integral_value(c) is not None for c in self.coeffs)

    def to_int(self) -> "IntPoly":
        """The same polynomial as an IntPoly; raises if a coefficient is fractional."""
        if isinstance(self, IntPoly):
            return self
        if not self.is_integral():
            raise DomainError(f"{self!r} does not have integer coefficients")
        return IntPoly._raw(tuple(_integral_value(c) for c in self.coeffs))

    def coeff(self, k: int):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __len__(self):
        return len(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _build([other]).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return _build([x + y for x, y in zip(a, b)] + list(a[len(b):]))

    __radd__ = __add__

    def __neg__(self):
        return _build([-c for c in self.coeffs])

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return _build([c * other for c in self.coeffs])
        other = _as_poly(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return _build([])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return _build(out)

    __rmul__ = __mul__

    def __truediv__(self, k):
        k = as_rational(k)
        return _build([c / k for c in self.coeffs])

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            return NotImplemented
        result = _build([1])
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, x):
        if isinstance(x, Enclosure):
            return eval_enclosure(self, x)
        return eval_rational(self, x)

    def __repr__(self):
        name = type(self).__name__
        return f"{name}([{', '.join(str(c) for c in self.coeffs)}])"

    def pretty(self, var: str = "x") -> str:
        """Human-readable high-to-low rendering, e.g. ``x^4 - 6x^3 + 19x^2``."""
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                mono = var if k == 1 else f"{var}^{k}"
                if mag == 1:
                    body = mono
                elif isinstance(mag, Fraction) and mag.denominator != 1:
                    body = f"({mag}){mono}"
                else:
                    body = f"{mag}{mono}"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out


class IntPoly(RatPoly):
    """Polynomial with arbitrary-precision integer coefficients."""

    __slots__ = ()

    @staticmethod
    def _coerce(c):
        v = _integral_value(as_rational(c)) if not isinstance(c, int) else c
        if v is None:
            raise DomainError(f"non-integer coefficient {c} in IntPoly")
        return v


def _as_poly(x):
    if isinstance(x, RatPoly):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return _build([x])
    return NotImplemented


# ---------------------------------------------------------------------------
# Calculus
# ---------------------------------------------------------------------------


def derivative(f: RatPoly) -> RatPoly:
    """Formal derivative."""
    return _build([k * c for k, c in enumerate(f.coeffs)][1:])


def nth_derivative(f: RatPoly, n: int) -> RatPoly:
    """n-th formal derivative, using falling factorials m!/(m-n)! directly."""
    if n < 0:
        raise DomainError("derivative order must be nonnegative")
    cs = f.coeffs
    if n == 0:
        return f
    out = []
    for m in range(n, len(cs)):
        out.append(cs[m] * (math.factorial(m) // math.factorial(m - n)))
    return _build(out)


def nth_derivative_div_factorial(f: IntPoly, n: int) -> IntPoly:
    """f^(n) / n! for an integer polynomial, with the division checked exact.

    The image of x^m is C(m, n) x^(m-n), so the result always has integer
    coefficients. A nonzero remainder would be a defect and raises
    :class:`InvariantError`.
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError("derivative order must be a nonnegative integer")
    f = f.to_int()
    nf = factorial(n)
    out = []
    for c in nth_derivative(f, n).coeffs:
        q, r = divmod(c, nf)
        if r:
            raise InvariantError(f"f^({n}) has a coefficient {c} not divisible by {n}!")
        out.append(q)
    return IntPoly._raw(tuple(_strip(out)))


def affine_substitute(f: RatPoly, alpha, beta) -> RatPoly:
    """f(alpha*x + beta), fully expanded."""
    lin = _build([as_rational(beta), as_rational(alpha)])
    out = _build([])
    for c in reversed(f.coeffs):
        out = out * lin + c
    return out


def niven_poly(a: int, b: int, n: int) -> IntPoly:
    """x^n (a - b x)^n expanded via the binomial theorem.

    The coefficient of x^(n+l) is C(n, l) a^(n-l) (-b)^l.
    """
    for name, v in (("a", a), ("b", b)):
        if not isinstance(v, int) or v < 1:
            raise DomainError(f"{name} must be a positive integer, got {v!r}")
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    cs = [0] * n
    a_pow = [1] * (n + 1)
    for i in range(1, n + 1):
        a_pow[i] = a_pow[i - 1] * a
    b_pow = 1
    for l in range(n + 1):
        cs.append(binomial(n, l) * a_pow[n - l] * b_pow)
        b_pow *= -b
    return IntPoly._raw(tuple(cs))


def eval_rational(f: RatPoly, x) -> Fraction:
    """Exact value f(x).

    Denominators are cleared first so Horner's scheme runs on integers and
    only one reduction happens at the end.
    """
    x = as_rational(x)
    cs = f.coeffs
    if not cs:
        return Fraction(0)
    lcd = 1
    for c in cs:
        if not isinstance(c, int):
            lcd = lcd * c.denominator // math.gcd(lcd, c.denominator)
    ints = [c if isinstance(c, int) else c.numerator * (lcd // c.denominator) for c in cs]
    p, q = x.numerator, x.denominator
    d = len(ints) - 1
    acc = ints[d]
    qpow = 1
    for k in range(d - 1, -1, -1):
        qpow *= q
        acc = acc * p + ints[k] * qpow
    return Fraction(acc, qpow * lcd)


def eval_enclosure(f: RatPoly, x: Enclosure) -> Enclosure:
    """Enclosure of f over the interval x, by Horner's scheme."""
    cs = f.coeffs
    if not cs:
        return Enclosure.point(0)
    acc = Enclosure.point(cs[-1])
    for c in reversed(cs[:-1]):
        acc = acc * x + c
    return acc


def antiderivative(f: RatPoly) -> RatPoly:
    """The antiderivative with zero constant term."""
    return _build([0] + [Fraction(c) / (k + 1) for k, c in enumerate(f.coeffs)])


def integrate_poly_exact(f: RatPoly, lo, hi) -> Fraction:
    """Exact definite integral of f over [lo, hi]."""
    g = antiderivative(f)
    return eval_rational(g, hi) - eval_rational(g, lo)


def abs_bound_on(f: RatPoly, lo, hi) -> Fraction:
    """A rational upper bound on |f| over [lo, hi] (sum of |c_k| * M^k)."""
    m = max(abs(as_rational(lo)), abs(as_rational(hi)))
    total = Fraction(0)
    power = Fraction(1)
    for c in f.coeffs:
        total += abs(c) * power
        power *= m
    return total
