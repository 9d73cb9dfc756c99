"""Rational approximations to e^r read off the exact integral identity.

For f = x^n (r - x)^n and F = f_exp(f),

    F(r) e^r - F(0) = int_0^r f(x) e^x dx,

and the right side is small, so F(0)/F(r) approximates e^r with error
``int / F(r)``. The polynomial is left unnormalised (no division by n!):
the ratio does not depend on that scaling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

from .bigmath import Enclosure, as_rational, enclose_exp, format_rational
from .errors import DegenerateApproximantError, DomainError, IndeterminateError
from .foperator import f_exp
from .polycore import eval_rational, niven_poly
from .witness import _exp_upper

__all__ = ["ConvergentRow", "er_convergent", "er_error_table", "cf_convergents", "cf_digits"]


def _approximant_parts(r: int, n: int):
    F = f_exp(niven_poly(r, 1, n))
    return eval_rational(F, 0), eval_rational(F, r)


def er_convergent(r: int, n: int) -> Fraction:
    """F(0)/F(r) for f = x^n (r - x)^n; raises if F(r) = 0."""
    if not isinstance(r, int) or r < 1:
        raise DomainError(f"r must be a positive integer, got {r!r}")
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"n must be a nonnegative integer, got {n!r}")
    F0, Fr = _approximant_parts(r, n)
    if Fr == 0:
        raise DegenerateApproximantError(f"F(r) = 0 for r={r}, n={n}")
    return F0 / Fr


@dataclass(frozen=True)
class ConvergentRow:
    """One row of the approximation table.

    ``error`` encloses e^r - approximant; ``bound`` is r^(2n+1) E / |F(r)|
    with E a rational upper bound on e^r. Degenerate rows (F(r) = 0) keep
    their index and carry None in every numeric field.
    """

    n: int
    approximant: Optional[Fraction]
    error: Optional[Enclosure]
    bound: Optional[Fraction]
    degenerate: bool = False

    def to_dict(self) -> dict:
        if self.degenerate:
            return {"n": self.n, "degenerate": True, "approximant": None, "error": None, "bound": None}
        return {
            "n": self.n,
            "degenerate": False,
            "approximant": format_rational(self.approximant),
            "error": {"lo": format_rational(self.error.lo), "hi": format_rational(self.error.hi)},
            "bound": format_rational(self.bound),
        }


def er_error_table(r: int, n_max: int, eps) -> List[ConvergentRow]:
    """Rows n = 0..n_max with error enclosures of width at most eps."""
    if not isinstance(n_max, int) or n_max < 0:
        raise DomainError(f"n_max must be a nonnegative integer, got {n_max!r}")
    if not isinstance(r, int) or r < 1:
        raise DomainError(f"r must be a positive integer, got {r!r}")
    eps = as_rational(eps)
    if eps <= 0:
        raise DomainError("eps must be positive")
    e_r = enclose_exp(r, eps)
    upper = _exp_upper(r)
    rows = []
    for n in range(n_max + 1):
        F0, Fr = _approximant_parts(r, n)
        if Fr == 0:
            rows.append(ConvergentRow(n, None, None, None, degenerate=True))
            continue
        approx = F0 / Fr
        rows.append(ConvergentRow(n, approx, e_r - approx, r ** (2 * n + 1) * upper / abs(Fr)))
    return rows


def cf_digits(x: Enclosure, k: int) -> List[int]:
    """First k partial quotients of the real enclosed by x.

    Stops early when x is a point whose expansion terminates. Raises
    IndeterminateError when a digit is not determined by the enclosure.
    """
    if not isinstance(k, int) or k < 1:
        raise DomainError("k must be a positive integer")
    digits = []
    lo, hi = x.lo, x.hi
    for _ in range(k):
        a = lo.numerator // lo.denominator
        if hi.numerator // hi.denominator != a:
            raise IndeterminateError(f"digit {len(digits)} straddles an integer in [{lo}, {hi}]")
        digits.append(a)
        lo, hi = lo - a, hi - a
        if lo == hi == 0:
            break
        if lo == 0:
            raise IndeterminateError(f"digit {len(digits)} is unbounded at this precision")
        # x -> 1/x reverses the order of the endpoints
        lo, hi = 1 / hi, 1 / lo
    return digits


def cf_convergents(x: Enclosure, k: int) -> List[Fraction]:
    """First k continued-fraction convergents of the real enclosed by x."""
    out = []
    h_prev, h = 0, 1
    k_prev, kk = 1, 0
    for a in cf_digits(x, k):
        h_prev, h = h, a * h + h_prev
        k_prev, kk = kk, a * kk + k_prev
        out.append(Fraction(h, kk))
    return out
