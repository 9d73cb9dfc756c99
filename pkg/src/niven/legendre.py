"""Legendre polynomials on [-1, 1] and shifted to [0, r].

Three independent constructions are provided (sum formula followed by an
affine shift, the direct shifted sum, and Rodrigues' formula) so they can be
checked against each other exactly. The inner product is the unweighted
``int_0^r f g dx``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .bigmath import Enclosure, as_rational, binomial, factorial
from .errors import DomainError, InvariantError
from .foperator import exp_integral_exact
from .polycore import (
    IntPoly,
    RatPoly,
    _build,
    affine_substitute,
    integrate_poly_exact,
    nth_derivative,
)

__all__ = [
    "LegendreBasis",
    "legendre_sum_formula",
    "shifted_legendre",
    "shifted_legendre_by_substitution",
    "rodrigues_shifted",
    "scaled_integer_legendre",
    "inner_product",
    "coefficient_enclosure",
    "cbs_bound",
]

_X = _build([0, 1])


def _check_n(n):
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"degree n must be a nonnegative integer, got {n!r}")


def _check_r(r) -> Fraction:
    r = as_rational(r)
    if r <= 0:
        raise DomainError(f"interval endpoint r must be positive, got {r}")
    return r


@dataclass(frozen=True)
class LegendreBasis:
    """The shifted Legendre polynomial of degree n on [0, r]."""

    n: int
    r: Fraction
    representation: RatPoly

    def __post_init__(self):
        _check_n(self.n)
        object.__setattr__(self, "r", _check_r(self.r))
        if self.representation.degree != self.n:
            raise DomainError("representation degree does not match n")

    @classmethod
    def build(cls, n: int, r=1) -> "LegendreBasis":
        return cls(n, as_rational(r), shifted_legendre(n, r))


def legendre_sum_formula(n: int) -> RatPoly:
    """P_n(x) = 2^-n sum_l C(n,l)^2 (x-1)^(n-l) (x+1)^l."""
    _check_n(n)
    xm, xp = _X - 1, _X + 1
    total = _build([])
    for l in range(n + 1):
        total = total + (xm ** (n - l)) * (xp**l) * (binomial(n, l) ** 2)
    return total / 2**n


def shifted_legendre_by_substitution(n: int, r) -> RatPoly:
    """P_n(2x/r - 1) from the sum formula."""
    r = _check_r(r)
    return affine_substitute(legendre_sum_formula(n), 2 / r, -1)


def shifted_legendre(n: int, r) -> RatPoly:
    """r^-n sum_l C(n,l)^2 x^l (x - r)^(n-l), the shifted polynomial on [0, r].

    The result is checked against the substitution route before returning.
    """
    _check_n(n)
    r = _check_r(r)
    direct = _scaled_sum(n, r) / r**n
    if direct != shifted_legendre_by_substitution(n, r):
        raise InvariantError(f"shifted Legendre constructions disagree for n={n}, r={r}")
    return direct


def _scaled_sum(n: int, r: Fraction) -> RatPoly:
    """sum_l C(n,l)^2 x^l (x - r)^(n-l), i.e. r^n times the shifted polynomial."""
    shifted = _X - r
    total = _build([])
    for l in range(n + 1):
        total = total + (_X**l) * (shifted ** (n - l)) * (binomial(n, l) ** 2)
    return total


def rodrigues_shifted(n: int, r) -> RatPoly:
    """(1 / (n! r^n)) d^n/dx^n [x^n (x - r)^n]."""
    _check_n(n)
    r = _check_r(r)
    g = (_X * (_X - r)) ** n
    return nth_derivative(g, n) / (factorial(n) * r**n)


def scaled_integer_legendre(n: int, r: int) -> IntPoly:
    """r^n times the shifted polynomial on [0, r]; integer coefficients for integer r."""
    _check_n(n)
    if not isinstance(r, int) or r < 1:
        raise DomainError(f"r must be a positive integer, got {r!r}")
    poly = _scaled_sum(n, Fraction(r))
    if not poly.is_integral():
        raise InvariantError(f"r^n P~_n has a fractional coefficient for n={n}, r={r}")
    return poly.to_int()


def inner_product(f: RatPoly, g: RatPoly, r) -> Fraction:
    """<f, g> = int_0^r f(x) g(x) dx, exactly."""
    r = _check_r(r)
    return integrate_poly_exact(f * g, 0, r)


def coefficient_enclosure(n: int, r: int, q: int, eps) -> Enclosure:
    """Enclosure of r^n q int_0^r P~_n(x) e^x dx, width at most eps.

    Computed from the exact form F(r) e^r - F(0) with f = r^n P~_n, so the
    only approximation is the enclosure of e^r. Use ``Enclosure.sign()`` on
    the result: ``None`` means the sign is indeterminate at this precision.
    """
    if not isinstance(q, int) or q < 1:
        raise DomainError(f"q must be a positive integer, got {q!r}")
    form = exp_integral_exact(scaled_integer_legendre(n, r), r).scaled(q)
    return form.enclose(eps)


def cbs_bound(n: int, r: int, q: int) -> Fraction:
    """2 q r^(2n+1) / (n! (2n+1)), the Cauchy-Schwarz bound on the scaled coefficient.

    Valid only when n + 1 >= 2r, which makes x/(n+1) <= 1/2 on [0, r] and
    justifies the tail estimate e_n(x) <= 2 x^n / n!.
    """
    _check_n(n)
    for name, v in (("r", r), ("q", q)):
        if not isinstance(v, int) or v < 1:
            raise DomainError(f"{name} must be a positive integer, got {v!r}")
    if n + 1 < 2 * r:
        raise DomainError(f"bound needs n + 1 >= 2r, got n={n}, r={r}")
    return Fraction(2 * q * r ** (2 * n + 1), factorial(n) * (2 * n + 1))
