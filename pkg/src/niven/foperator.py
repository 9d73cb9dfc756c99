"""Alternating-derivative operators and the exact integrals they produce.

For a polynomial f,

* ``f_exp(f) = f - f' + f'' - ...`` satisfies ``F + F' = f``, hence
  ``int_0^c f(x) e^x dx = F(c) e^c - F(0)``;
* ``f_sin(f) = f - f'' + f'''' - ...`` satisfies ``F + F'' = f``, hence
  ``int_0^c f(x) sin x dx = F'(c) sin c - F(c) cos c + F(0)``.

Both sums are finite. They are computed from the top coefficient down via
those differential equations, which costs one pass over the coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import bigmath
from .bigmath import Enclosure, as_rational, factorial
from .errors import DomainError, InvariantError
from .polycore import (
    RatPoly,
    _build,
    abs_bound_on,
    derivative,
    eval_rational,
    integrate_poly_exact,
    niven_poly,
)

__all__ = [
    "LinearFormExp",
    "LinearFormTrig",
    "f_exp",
    "f_sin",
    "exp_integral_exact",
    "sin_integral_exact",
    "corollary1_quantities",
    "corollary2_quantities",
    "sin_integral_over",
    "enclose_integral_series",
]


def f_exp(f: RatPoly) -> RatPoly:
    """F = f - f' + f'' - f''' + ..., the exponential-kernel operator."""
    cs = f.coeffs
    out = [0] * len(cs)
    nxt = 0
    # F_j = f_j - (j+1) F_{j+1}
    for j in range(len(cs) - 1, -1, -1):
        nxt = cs[j] - (j + 1) * nxt
        out[j] = nxt
    return _build(out)


def f_sin(f: RatPoly) -> RatPoly:
    """F = f - f'' + f'''' - ..., the sine-kernel operator."""
    cs = f.coeffs
    out = [0] * len(cs)
    # F_j = f_j - (j+2)(j+1) F_{j+2}
    for j in range(len(cs) - 1, -1, -1):
        above = out[j + 2] if j + 2 < len(cs) else 0
        out[j] = cs[j] - (j + 2) * (j + 1) * above
    return _build(out)


@dataclass(frozen=True)
class LinearFormExp:
    """The real number ``u * e^c + v``."""

    u: Fraction
    v: Fraction
    c: Fraction

    def scaled(self, k) -> "LinearFormExp":
        k = as_rational(k)
        return LinearFormExp(self.u * k, self.v * k, self.c)

    def evaluate(self, exp_c: Enclosure) -> Enclosure:
        """Enclosure of the value given any enclosure of e^c."""
        return exp_c * self.u + self.v

    def enclose(self, eps) -> Enclosure:
        """Enclosure of width at most ``eps``."""
        eps = as_rational(eps)
        if eps <= 0:
            raise DomainError("eps must be positive")
        if self.u == 0:
            return Enclosure.point(self.v)
        return self.evaluate(bigmath.enclose_exp(self.c, eps / abs(self.u)))


@dataclass(frozen=True)
class LinearFormTrig:
    """The real number ``s * sin c + t * cos c + w``."""

    s: Fraction
    t: Fraction
    w: Fraction
    c: Fraction

    def scaled(self, k) -> "LinearFormTrig":
        k = as_rational(k)
        return LinearFormTrig(self.s * k, self.t * k, self.w * k, self.c)

    def evaluate(self, sin_c: Enclosure, cos_c: Enclosure) -> Enclosure:
        return sin_c * self.s + cos_c * self.t + self.w

    def enclose(self, eps) -> Enclosure:
        """Enclosure of width at most ``eps``."""
        eps = as_rational(eps)
        if eps <= 0:
            raise DomainError("eps must be positive")
        share = eps / 2
        sin_c = bigmath.enclose_sin(self.c, share / abs(self.s)) if self.s else Enclosure.point(0)
        cos_c = bigmath.enclose_cos(self.c, share / abs(self.t)) if self.t else Enclosure.point(0)
        return self.evaluate(sin_c, cos_c)


def exp_integral_exact(f: RatPoly, c) -> LinearFormExp:
    """int_0^c f(x) e^x dx as the exact form F(c) e^c - F(0)."""
    c = as_rational(c)
    F = f_exp(f)
    return LinearFormExp(eval_rational(F, c), -eval_rational(F, 0), c)


def sin_integral_exact(f: RatPoly, c) -> LinearFormTrig:
    """int_0^c f(x) sin x dx as F'(c) sin c - F(c) cos c + F(0).

    At c = pi this reduces to F(pi) + F(0).
    """
    c = as_rational(c)
    F = f_sin(f)
    return LinearFormTrig(eval_rational(derivative(F), c), -eval_rational(F, c), eval_rational(F, 0), c)


def sin_integral_over(f: RatPoly, c: Enclosure, eps) -> Enclosure:
    """Enclosure of F'(c) sin c - F(c) cos c + F(0) for every c in an interval."""
    F = f_sin(f)
    sin_c = bigmath.sin_over(c, eps)
    cos_c = bigmath.cos_over(c, eps)
    return derivative(F)(c) * sin_c - F(c) * cos_c + eval_rational(F, 0)


def _exact_quotient(num: int, den: int, what: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise InvariantError(f"{what}: {num} is not divisible by {den}")
    return q


def corollary1_quantities(r: int, n: int):
    """(F(0)/n!, F(r)/n!) for f = x^n (r - x)^n and F = f_exp(f); both integers."""
    F = f_exp(niven_poly(r, 1, n))
    nf = factorial(n)
    F0 = eval_rational(F, 0)
    Fr = eval_rational(F, r)
    return (
        _exact_quotient(F0.numerator, nf, "F(0)/n!"),
        _exact_quotient(Fr.numerator, nf, "F(r)/n!"),
    )


def corollary2_quantities(a: int, b: int, n: int):
    """(F(0)/n!, b^n F(a/b)/n!) for f = x^n (a - b x)^n and F = f_sin(f)."""
    F = f_sin(niven_poly(a, b, n))
    nf = factorial(n)
    F0 = eval_rational(F, 0)
    scaled = eval_rational(F, Fraction(a, b)) * b**n
    if scaled.denominator != 1:
        raise InvariantError(f"b^n F(a/b) = {scaled} is not an integer")
    return (
        _exact_quotient(F0.numerator, nf, "F(0)/n!"),
        _exact_quotient(scaled.numerator, nf, "b^n F(a/b)/n!"),
    )


def _taylor_poly(kind: str, n_terms: int) -> RatPoly:
    """First n_terms nonzero Taylor terms of e^x or sin x."""
    if kind == "exp":
        return _build([Fraction(1, factorial(k)) for k in range(n_terms)])
    cs = [0] * (2 * n_terms)
    for k in range(n_terms):
        cs[2 * k + 1] = Fraction((-1) ** k, factorial(2 * k + 1))
    return _build(cs)


def enclose_integral_series(f: RatPoly, c, kind: str, eps) -> Enclosure:
    """Enclosure of int_0^c f(x) g(x) dx, g = e^x or sin x, without using F.

    The kernel's Taylor series is truncated, the polynomial product is
    integrated exactly, and the remainder is bounded by
    ``max|f| * c * tail`` where ``tail`` bounds the omitted kernel terms on
    [0, c] geometrically.
    """
    c = as_rational(c)
    eps = as_rational(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    if c < 0:
        raise DomainError("upper limit c must be nonnegative")
    if kind not in ("exp", "sin"):
        raise DomainError(f"kind must be 'exp' or 'sin', got {kind!r}")
    if c == 0 or f.is_zero():
        return Enclosure.around(0, eps / 2)
    fmax = abs_bound_on(f, 0, c)
    budget = eps / 4
    # smallest first-omitted exponent m past 2c whose geometric tail fits
    step = 1 if kind == "exp" else 2
    m = 1 if kind == "sin" else 0
    while True:
        if m >= 2 * c:
            tail = 2 * c**m / factorial(m)
            if fmax * c * tail <= budget:
                break
        m += step
    n_terms = m if kind == "exp" else (m - 1) // 2
    g = _taylor_poly(kind, n_terms)
    center = integrate_poly_exact(f * g, 0, c)
    radius = fmax * c * 2 * c**m / factorial(m)
    if radius > budget:
        raise InvariantError("series remainder exceeded its budget")
    return Enclosure.around(center, eps / 2)
