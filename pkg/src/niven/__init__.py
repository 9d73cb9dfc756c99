"""Exact and certified computations behind the classical irrationality
proofs for e, e^r and pi.

Rational arithmetic is exact; every transcendental value is carried as a
rigorous rational :class:`Enclosure`.
"""

from .approx import ConvergentRow, cf_convergents, cf_digits, er_convergent, er_error_table
from .bigmath import (
    Enclosure,
    binomial,
    enclose_cos,
    enclose_exp,
    enclose_pi,
    enclose_sin,
    factorial,
    format_rational,
    parse_rational,
)
from .errors import (
    DegenerateApproximantError,
    DomainError,
    IndeterminateError,
    InvariantError,
    NivenError,
    ResourceLimitError,
)
from .foperator import (
    LinearFormExp,
    LinearFormTrig,
    corollary1_quantities,
    corollary2_quantities,
    enclose_integral_series,
    exp_integral_exact,
    f_exp,
    f_sin,
    sin_integral_exact,
)
from .legendre import (
    LegendreBasis,
    cbs_bound,
    coefficient_enclosure,
    rodrigues_shifted,
    scaled_integer_legendre,
    shifted_legendre,
)
from .polycore import IntPoly, RatPoly, niven_poly
from .witness import (
    Certificate,
    crude_bound_exp,
    fourier_witness,
    minimal_n_cbs,
    minimal_n_exp,
    minimal_n_pi,
    naive_er_bound,
    niven_falsify,
    pi_bound,
)

__version__ = "0.1.0"
