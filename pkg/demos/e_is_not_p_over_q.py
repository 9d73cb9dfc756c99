"""
e is not p/q, one denominator at a time
=======================================

Multiply e = p/q by q!. The left side becomes an integer plus a tail
that sits strictly between 0 and 1/q, which no integer can match.
"""
from fractions import Fraction

from niven import enclose_exp, factorial, fourier_witness
from niven.bigmath import sci_approx

eps = Fraction(1, 10**30)

# the tail q! e - q! sum_{k<=q} 1/k! for a few q
for q in (1, 2, 5, 10, 25, 50):
    cert = fourier_witness(q, eps)
    tail = cert.enclosed_side
    print(f"q={q:3d}  tail in [{sci_approx(tail.lo)}, {sci_approx(tail.hi)}]   1/q = {sci_approx(Fraction(1, q))}")

# same thing by hand for q = 7
q = 7
s = sum(Fraction(factorial(q), factorial(k)) for k in range(q + 1))
print("q! * sum 1/k! for q=7:", s)       # an integer
print("q! e - that:", sci_approx((enclose_exp(1, eps) * factorial(q) - s).lo))
