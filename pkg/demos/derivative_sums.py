"""
Alternating derivative sums
===========================

F = f - f' + f'' - ... turns int f e^x into F(c) e^c - F(0), and
F = f - f'' + f'''' - ... does the same for sin. For f = x^n (r-x)^n every
derivative at 0 and r is a multiple of n!, so F(0)/n! and F(r)/n! are integers.
"""
from fractions import Fraction

from niven import f_exp, f_sin, niven_poly
from niven.foperator import corollary1_quantities, corollary2_quantities, enclose_integral_series, exp_integral_exact
from niven.polycore import derivative, nth_derivative_div_factorial

f = niven_poly(2, 1, 3)      # x^3 (2 - x)^3
print("f        =", f)
print("f'''/3!  =", nth_derivative_div_factorial(f, 3))   # integer coefficients
F = f_exp(f)
print("F        =", F)
print("F + F' == f:", F + derivative(F) == f)

# the integers the e^r argument needs
for n in range(1, 6):
    print(n, corollary1_quantities(2, n))

# and the pair the pi argument needs, for a/b = 22/7
print(corollary2_quantities(22, 7, 2))

# exact form against a truncated series, same integral
eps = Fraction(1, 10**25)
print(exp_integral_exact(f, 2).enclose(eps).intersects(enclose_integral_series(f, 2, "exp", eps)))
print(f_sin(f) + derivative(derivative(f_sin(f))) == f)
