"""Contradiction certificates and minimal-n solvers.

A certificate pairs an exact integer with a rigorously enclosed real number
that a rational candidate would force to be equal. When the enclosure of
their difference excludes zero the candidate is falsified.

Two engines are provided:

* :func:`fourier_witness` scales the series for e by q! and shows the
  leftover tail lies strictly between 0 and 1.
* :func:`niven_falsify` evaluates the sine-kernel identity for
  f = x^n (a - b x)^n at c = a/b, scaled by b^n / n!.

The minimal-n solvers return the first n at which a bound from the proofs
drops below 1. Every bound has a step ratio bound(n+1)/bound(n) that is
nonincreasing in n, so past the point where the ratio falls below 1 the bound
is strictly decreasing and the first crossing can be found by exact bracketed
search rather than a linear scan.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass, field, replace
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional

import gmpy2
from gmpy2 import mpz

from .bigmath import (
    Enclosure,
    as_rational,
    enclose_exp,
    factorial,
    fixed_sin_cos,
    format_rational,
    hypergeometric_partial_sum,
    int_to_str,
    reduced_fraction,
)
from .errors import DomainError, InvariantError, ResourceLimitError
from .foperator import LinearFormTrig, _exact_quotient, f_sin
from .polycore import derivative, eval_rational, niven_poly

__all__ = [
    "Certificate",
    "DEFAULT_CAP",
    "DEFAULT_WORK_CAP",
    "fourier_witness",
    "naive_er_bound",
    "crude_bound_exp",
    "pi_bound",
    "minimal_n_exp",
    "minimal_n_pi",
    "minimal_n_cbs",
    "niven_falsify",
]

DEFAULT_CAP = 10**6
# largest n niven_falsify will attempt
DEFAULT_WORK_CAP = 500_000
EXP_UPPER_EPS = Fraction(1, 10**6)


def _env_cap() -> int:
    raw = os.environ.get("NIVEN_CAP")
    return int(raw) if raw else DEFAULT_CAP


def _enclosure_dict(e: Enclosure) -> dict:
    return {"lo": format_rational(e.lo), "hi": format_rational(e.hi)}


@dataclass(frozen=True)
class Certificate:
    """Record of one witness computation.

    ``integer_side`` is the integer the candidate would force to equal the
    real number enclosed by ``enclosed_side``; ``difference`` encloses
    ``integer_side - enclosed_side``. ``mechanism`` is ``"integer-gap"`` when
    the enclosed side lies strictly inside (0, 1), so no integer can match
    it, and ``"boundary-mismatch"`` when only the difference excludes zero.
    """

    kind: str
    candidate: Fraction
    n: Optional[int]
    integer_side: int
    enclosed_side: Enclosure
    bound: Fraction
    verdict: str
    precision: Fraction
    difference: Enclosure
    integer_parts: tuple = ()
    mechanism: Optional[str] = None
    refined: bool = False
    notes: tuple = field(default=())

    @property
    def falsified(self) -> bool:
        return self.verdict == "falsified"

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "candidate": format_rational(self.candidate),
            "n": self.n,
            "integer_side": int_to_str(self.integer_side),
            "integer_parts": [int_to_str(v) for v in self.integer_parts],
            "enclosed_side": _enclosure_dict(self.enclosed_side),
            "difference": _enclosure_dict(self.difference),
            "bound": format_rational(self.bound),
            "verdict": self.verdict,
            "mechanism": self.mechanism,
            "precision": format_rational(self.precision),
            "refined": self.refined,
            "notes": list(self.notes),
        }


def _positive_int(name: str, v) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or v < 1:
        raise DomainError(f"{name} must be a positive integer, got {v!r}")
    return v


def _positive_eps(eps) -> Fraction:
    eps = as_rational(eps)
    if eps <= 0:
        raise DomainError(f"eps must be positive, got {eps}")
    return eps


def _refine(eps: Fraction) -> Fraction:
    # squaring alone does not tighten a coarse eps
    return min(eps * eps, eps / 2**32)


# ---------------------------------------------------------------------------
# Fourier's argument for e
# ---------------------------------------------------------------------------


def _fourier_attempt(q: int, eps: Fraction) -> Certificate:
    qf = factorial(q)
    # S = q! * sum_{k<=q} 1/k!, built as the falling products q!/k!
    s_int, term = 0, 1
    for k in range(q, -1, -1):
        s_int += term
        term *= k
    e_enc = enclose_exp(1, eps / qf)
    tail = e_enc * qf - s_int
    p = round(e_enc.midpoint * q)
    scaled_p = (qf // q) * p
    forced = scaled_p - s_int
    bound = Fraction(1, q)
    falsified = tail.lo > 0 and tail.hi <= bound and tail.hi < 1
    difference = forced - tail
    return Certificate(
        kind="fourier-e",
        candidate=Fraction(p, q),
        n=None,
        integer_side=forced,
        enclosed_side=tail,
        bound=bound,
        verdict="falsified" if falsified else "indeterminate",
        precision=eps,
        difference=difference,
        integer_parts=(scaled_p, s_int),
        mechanism="integer-gap" if falsified else None,
        notes=("q!*e - q!*sum_{k<=q} 1/k! lies in (0, 1/q]; no integer p gives e = p/q",),
    )


def fourier_witness(q: int, eps) -> Certificate:
    """Fourier certificate that e has no representation p/q with this q.

    The integer ``S = q! * sum_{k<=q} 1/k!`` is exact; ``T = q! e - S`` is
    enclosed with width at most ``eps`` and certified to lie in (0, 1/q].
    The reported candidate uses the numerator p nearest to q*e, and
    ``integer_side = q! p / q - S`` is the integer that would have to equal T.
    """
    _positive_int("q", q)
    eps = _positive_eps(eps)
    cert = _fourier_attempt(q, eps)
    if cert.falsified:
        return cert
    retry = _fourier_attempt(q, _refine(eps))
    return replace(retry, refined=True)


def naive_er_bound(r: int, q: int):
    """Geometric-series bound r^(q+1) / (q+1-r) on the scaled tail of e^r.

    Returns ``(bound, fails)``. The tail is strictly below the bound, so
    the argument fails only when the bound exceeds 1.
    """
    _positive_int("r", r)
    _positive_int("q", q)
    if q + 1 <= r:
        raise DomainError(f"comparison series diverges for q + 1 <= r (r={r}, q={q})")
    bound = Fraction(r ** (q + 1), q + 1 - r)
    return bound, bound > 1


# ---------------------------------------------------------------------------
# Bounds and minimal-n solvers
# ---------------------------------------------------------------------------


@lru_cache(maxsize=64)
def _exp_upper(r: int) -> Fraction:
    """Rational upper bound on e^r: the top of a width-10^-6 enclosure."""
    return enclose_exp(r, EXP_UPPER_EPS).hi


def crude_bound_exp(r: int, q: int, n: int) -> Fraction:
    """q r^(2n+1) E / n!, with E a rational upper bound on e^r.

    Bounds (q/n!) int_0^r x^n (r-x)^n e^x dx by interval length times the
    maximum of each factor.
    """
    _positive_int("r", r)
    _positive_int("q", q)
    if not isinstance(n, int) or n < 0:
        raise DomainError("n must be a nonnegative integer")
    return q * r ** (2 * n + 1) * _exp_upper(r) / factorial(n)


def pi_bound(a: int, b: int, n: int) -> Fraction:
    """a^(2n+1) / (b n!), the scaled area bound for the candidate a/b."""
    _positive_int("a", a)
    _positive_int("b", b)
    if not isinstance(n, int) or n < 0:
        raise DomainError("n must be a nonnegative integer")
    return reduced_fraction(mpz(a) ** (2 * n + 1), b * gmpy2.fac(n))


def _first_true(pred: Callable[[int], bool], lo: int, cap: int, guess: int) -> int:
    """Smallest n in [lo, cap] with pred(n), for pred monotone false -> true.

    Gallops outward from ``guess`` to bracket the crossing, then bisects.
    Raises ResourceLimitError when pred(cap) is false.
    """
    g = min(max(guess, lo), cap)
    if pred(g):
        hi = g
        step = 1
        while True:
            cand = hi - step
            if cand < lo:
                below = lo - 1
                break
            if pred(cand):
                hi = cand
                step *= 2
            else:
                below = cand
                break
    else:
        below = g
        step = 1
        while True:
            cand = below + step
            if cand >= cap:
                if not pred(cap):
                    raise ResourceLimitError(f"no crossing at or below the scan cap {cap}")
                hi = cap
                break
            if pred(cand):
                hi = cand
                break
            below = cand
            step *= 2
    while hi - below > 1:
        mid = (below + hi) // 2
        if pred(mid):
            hi = mid
        else:
            below = mid
    return hi


def _float_guess(log_bound: Callable[[int], float], lo: int, cap: int) -> int:
    """Approximate first n >= lo with log_bound(n) < 0 (a search hint only)."""
    if log_bound(lo) < 0:
        return lo
    hi = max(lo + 1, 2 * lo)
    while hi < cap and log_bound(hi) >= 0:
        hi *= 2
    hi = min(hi, cap)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if log_bound(mid) < 0:
            hi = mid
        else:
            lo = mid
    return hi


def _minimal_n(below_one, ratio_below_one, log_bound, start: int, cap: int) -> int:
    """First n >= start with bound(n) < 1, assuming a nonincreasing step ratio."""
    if start > cap:
        raise ResourceLimitError(f"first valid n={start} exceeds the scan cap {cap}")
    if below_one(start):
        return start
    # while the ratio is >= 1 the bound does not decrease, so it stays >= 1
    if ratio_below_one(cap):
        turn = _first_true(ratio_below_one, start, cap, start)
    else:
        raise ResourceLimitError(f"bound still increasing at the scan cap {cap}")
    if below_one(turn):
        return turn
    guess = _float_guess(log_bound, turn, cap)
    return _first_true(below_one, turn, cap, guess)


def minimal_n_pi(a: int, b: int, cap: Optional[int] = None) -> int:
    """First n with a^(2n+1) / (b n!) < 1."""
    _positive_int("a", a)
    _positive_int("b", b)
    cap = _env_cap() if cap is None else cap
    la, lb = math.log(a), math.log(b)
    return _minimal_n(
        lambda n: a ** (2 * n + 1) < b * factorial(n),
        lambda n: a * a < n + 1,
        lambda n: (2 * n + 1) * la - lb - math.lgamma(n + 1),
        0,
        cap,
    )


def minimal_n_exp(r: int, q: int, cap: Optional[int] = None) -> int:
    """First n with crude_bound_exp(r, q, n) < 1."""
    _positive_int("r", r)
    _positive_int("q", q)
    cap = _env_cap() if cap is None else cap
    upper = _exp_upper(r)
    un, ud = upper.numerator, upper.denominator
    lr, lq, lu = math.log(r), math.log(q), math.log(un) - math.log(ud)
    return _minimal_n(
        lambda n: q * r ** (2 * n + 1) * un < ud * factorial(n),
        lambda n: r * r < n + 1,
        lambda n: lq + (2 * n + 1) * lr + lu - math.lgamma(n + 1),
        0,
        cap,
    )


def minimal_n_cbs(r: int, q: int, cap: Optional[int] = None) -> int:
    """First n >= 2r - 1 with cbs_bound(n, r, q) < 1."""
    _positive_int("r", r)
    _positive_int("q", q)
    cap = _env_cap() if cap is None else cap
    lr, lq = math.log(r), math.log(q)
    return _minimal_n(
        lambda n: 2 * q * r ** (2 * n + 1) < factorial(n) * (2 * n + 1),
        lambda n: r * r * (2 * n + 1) < (n + 1) * (2 * n + 3),
        lambda n: math.log(2) + lq + (2 * n + 1) * lr - math.lgamma(n + 1) - math.log(2 * n + 1),
        2 * r - 1,
        cap,
    )


# ---------------------------------------------------------------------------
# Niven's argument for pi
# ---------------------------------------------------------------------------


def _niven_polynomial(a: int, b: int, n: int):
    """Integer parts and an enclosing function, via the expanded polynomial F."""
    c = Fraction(a, b)
    F = f_sin(niven_poly(a, b, n))
    nf = factorial(n)
    bn = b**n
    F0 = eval_rational(F, 0)
    Fc = eval_rational(F, c)
    part0 = _exact_quotient(F0.numerator, nf, "F(0)/n!")
    part_c = _exact_quotient((Fc * bn).numerator, nf, "b^n F(a/b)/n!")
    # (b^n/n!) * int_0^c f sin = (b^n/n!) (F'(c) sin c - F(c) cos c + F(0))
    form = LinearFormTrig(eval_rational(derivative(F), c), -Fc, F0, c).scaled(Fraction(bn, nf))
    return (part0, part_c), bn * part0 + part_c, form.enclose


def niven_sums(a: int, b: int, n: int):
    """(F(0)/n!, F'(0)/n!) for f = x^n (a - b x)^n and F = f_sin(f), without expanding F.

    F(0) = sum_k (-1)^k f^(2k)(0) and f^(j)(0) / n! is
    (n+l)! / (l! (n-l)!) a^(n-l) (-b)^l for j = n + l, so each value is a
    sum over one parity class of l whose consecutive terms have a rational
    ratio. Both sums are evaluated by binary splitting.
    """
    _positive_int("a", a)
    _positive_int("b", b)
    a2, b2 = mpz(a) * a, mpz(b) * b

    def parity_sum(l0: int):
        if l0 > n:
            return 0
        count = (n - l0) // 2 + 1
        sign = -1 if ((n + l0) // 2) % 2 else 1
        first = sign * (n * (n + 1) if l0 else 1) * mpz(a) ** (n - l0) * (-b) ** l0

        def ratio_num(i):
            l = l0 + 2 * (i - 1)
            return -(n + l + 1) * (n + l + 2) * (n - l) * (n - l - 1) * b2

        def ratio_den(i):
            l = l0 + 2 * (i - 1)
            return (l + 1) * (l + 2) * a2

        num, den = hypergeometric_partial_sum(ratio_num, ratio_den, count)
        total, rem = divmod(first * num, den)
        if rem:
            raise InvariantError(f"derivative sum for a={a}, b={b}, n={n} is not an integer")
        return int(total)

    return parity_sum(n % 2), parity_sum(1 - n % 2)


def _ceil_log2_inverse(eps: Fraction) -> int:
    """Smallest g with 2^-g <= eps."""
    g = max(0, eps.denominator.bit_length() - eps.numerator.bit_length())
    while Fraction(1, 1 << g) > eps:
        g += 1
    return g


def _niven_symmetric(a: int, b: int, n: int):
    """Integer parts and an enclosing function from the symmetry f(x) = f(a/b - x).

    The symmetry gives F(a/b) = F(0) and F'(a/b) = -F'(0). With A = F(0)/n!
    and D = F'(0)/n! the integer side is 2 b^n A and the scaled integral is
    b^n (A (1 - cos c) - D sin c), which is evaluated in fixed point.
    """
    A, D = niven_sums(a, b, n)
    bn = mpz(b) ** n
    u, v = bn * A, bn * D
    c = Fraction(a, b)

    def enclose(eps) -> Enclosure:
        eps = as_rational(eps)
        g = _ceil_log2_inverse(eps / 8)
        k = g + 2 + (3 * (abs(u) + abs(v))).bit_length()
        (s_lo, s_hi), (c_lo, c_hi) = fixed_sin_cos(c, k)
        lo = (u << k) + min(-u * c_lo, -u * c_hi) + min(-v * s_lo, -v * s_hi)
        hi = (u << k) + max(-u * c_lo, -u * c_hi) + max(-v * s_lo, -v * s_hi)
        # round outward onto the coarser 2^-g grid
        shift = k - g
        lo, hi = lo >> shift, -((-hi) >> shift)
        den = mpz(1) << g
        return Enclosure(reduced_fraction(lo, den), reduced_fraction(hi, den))

    return (A, int(u)), int(2 * u), enclose


# n at which niven_falsify switches from the polynomial route to the symmetric one
SYMMETRIC_ROUTE_MIN_N = 1500


def _integral_log10_estimate(a: int, b: int, n: int) -> float:
    """Rough log10 of (b^n/n!) int_0^(a/b) x^n (a-bx)^n sin x dx.

    Peak of the scaled integrand (a^2/4)^n / n! times a width of order
    (a/b)/sqrt(n). Only used to choose a working precision.
    """
    return (
        n * math.log10(a * a / 4)
        - math.lgamma(n + 1) / math.log(10)
        + math.log10(a / b)
        - 0.5 * math.log10(n + 1)
    )


def _gap_precision(a: int, b: int, n: int) -> Fraction:
    digits = max(0, math.ceil(-_integral_log10_estimate(a, b, n))) + 30
    return Fraction(1, 10**digits)


def _niven_certificate(a, b, n, parts, integer_side, enclose, eps, refined, notes) -> Certificate:
    enclosed = enclose(eps)
    difference = integer_side - enclosed
    falsified = difference.excludes_zero()
    mechanism = None
    if falsified:
        mechanism = "integer-gap" if enclosed.strictly_inside(0, 1) else "boundary-mismatch"
    return Certificate(
        kind="niven-pi",
        candidate=Fraction(a, b),
        n=n,
        integer_side=integer_side,
        enclosed_side=enclosed,
        bound=pi_bound(a, b, n),
        verdict="falsified" if falsified else "indeterminate",
        precision=eps,
        difference=difference,
        integer_parts=parts,
        mechanism=mechanism,
        refined=refined,
        notes=tuple(notes),
    )


def niven_falsify(
    a: int,
    b: int,
    n: Optional[int] = None,
    eps=Fraction(1, 10**40),
    cap: Optional[int] = None,
    work_cap: int = DEFAULT_WORK_CAP,
    gap_refinements: int = 6,
    route: str = "auto",
) -> Certificate:
    """Certificate that a/b is not pi.

    ``integer_side`` is ``(b^n F(a/b) + b^n F(0)) / n!``, an integer for
    every a, b, n; ``integer_parts`` holds the two integers F(0)/n! and
    b^n F(a/b)/n!. ``enclosed_side`` encloses ``(b^n/n!) int_0^{a/b}
    x^n (a-bx)^n sin x dx``. If a/b were pi the two would be equal, so a
    difference enclosure excluding zero falsifies the candidate. With n left
    as None the first n whose area bound is below 1 is used.

    ``route`` picks how F is handled: ``"polynomial"`` expands it,
    ``"symmetric"`` evaluates only F(0) and F'(0) by binary splitting, and
    ``"auto"`` switches at SYMMETRIC_ROUTE_MIN_N.

    When the area bound is below 1 the working precision is tightened up
    front to the estimated size of the integral, which can sit hundreds of
    thousands of orders of magnitude below the bound. An indeterminate
    result is retried once at eps^2, and a boundary-mismatch result with a
    bound below 1 is refined up to ``gap_refinements`` more times to certify
    the enclosed side strictly inside (0, 1). Raises ResourceLimitError if
    n exceeds ``work_cap``.
    """
    _positive_int("a", a)
    _positive_int("b", b)
    eps = _positive_eps(eps)
    if route not in ("auto", "polynomial", "symmetric"):
        raise DomainError(f"unknown route {route!r}")
    if n is None:
        n = minimal_n_pi(a, b, cap)
    elif not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise DomainError("n must be a nonnegative integer")
    if n > work_cap:
        raise ResourceLimitError(
            f"n={n} exceeds the work cap {work_cap}: the certificate needs a degree-{2 * n} "
            f"polynomial and trig enclosures with ~{_digits_estimate(a, b, n)} correct digits"
        )
    if route == "auto":
        route = "symmetric" if n >= SYMMETRIC_ROUTE_MIN_N else "polynomial"
    build = _niven_symmetric if route == "symmetric" else _niven_polynomial
    parts, integer_side, enclose = build(a, b, n)
    notes = [f"route: {route}"]
    if pi_bound(a, b, n) < 1:
        target = _gap_precision(a, b, n)
        if target < eps:
            eps = target
            notes.append("precision tightened to the estimated size of the integral")
    cert = _niven_certificate(a, b, n, parts, integer_side, enclose, eps, False, notes)
    if not cert.falsified:
        cert = _niven_certificate(a, b, n, parts, integer_side, enclose, _refine(eps), True, notes)
    steps = 0
    while cert.mechanism == "boundary-mismatch" and cert.bound < 1 and steps < gap_refinements:
        cert = _niven_certificate(a, b, n, parts, integer_side, enclose, _refine(cert.precision), True, notes)
        steps += 1
    return cert


def _digits_estimate(a: int, b: int, n: int) -> int:
    """Rough decimal size of the integer side, for error messages."""
    return int((math.lgamma(2 * n + 1) - math.lgamma(n + 1) + 2 * n * math.log(b)) / math.log(10)) + 1
