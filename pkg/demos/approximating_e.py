"""
Rational approximations to e from the integral identity
=======================================================

F(0)/F(r) for f = x^n (r-x)^n approximates e^r, and for r = 1 the
approximants are continued-fraction convergents of e.
"""
from fractions import Fraction

from niven import cf_convergents, cf_digits, enclose_exp, er_convergent, er_error_table
from niven.bigmath import sci_approx

print([er_convergent(1, n) for n in range(5)])       # 3, 19/7, 193/71, ...

for row in er_error_table(1, 6, Fraction(1, 10**40)):
    print(row.n, row.approximant, sci_approx(row.error.lo), sci_approx(row.bound))

e = enclose_exp(1, Fraction(1, 10**60))
print(cf_digits(e, 15))       # [2, 1, 2, 1, 1, 4, 1, 1, 6, ...]
print(cf_convergents(e, 8))

# r = 2 has a degenerate row: F(2) = 0 when n = 1
print([row.degenerate for row in er_error_table(2, 3, Fraction(1, 10**20))])
