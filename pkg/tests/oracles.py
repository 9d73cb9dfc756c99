"""Independent reference computations shared by the test modules.

Everything here goes through sympy or plain loops, never through the
package's own polynomial or operator code.
"""

from fractions import Fraction

import sympy

X = sympy.Symbol("x")


def to_sympy(coeffs):
    terms = (sympy.Rational(c.numerator, c.denominator) * X**k for k, c in enumerate(map(Fraction, coeffs)))
    return sum(terms, sympy.Integer(0))


def from_sympy(expr):
    """Low-to-high Fraction coefficients of a sympy polynomial in x."""
    expr = sympy.expand(expr)
    if expr == 0:
        return []
    poly = sympy.Poly(expr, X)
    out = [Fraction(0)] * (poly.degree() + 1)
    for (k,), c in poly.terms():
        out[k] = Fraction(int(c.p), int(c.q))
    return out


def alternating_derivative_sum(expr, step):
    """f - f^(step) + f^(2 step) - ..., by iterated differentiation."""
    total, sign, term = 0, 1, sympy.expand(expr)
    while term != 0:
        total += sign * term
        term = sympy.diff(term, X, step)
        sign = -sign
    return sympy.expand(total)


def niven_expr(a, b, n):
    return X**n * (a - b * X) ** n


def as_fraction(value):
    value = sympy.nsimplify(value)
    return Fraction(int(value.p), int(value.q))
