"""
Shifted Legendre polynomials on [0, r]
======================================

Three constructions that should agree exactly, their orthogonality, and
how fast the e^x coefficient against them shrinks.
"""
from fractions import Fraction

from niven import cbs_bound, coefficient_enclosure, rodrigues_shifted, shifted_legendre
from niven.bigmath import sci_approx
from niven.legendre import inner_product, shifted_legendre_by_substitution
from niven.witness import minimal_n_cbs

r = Fraction(7, 2)
for n in range(5):
    p = shifted_legendre(n, r)
    same = p == rodrigues_shifted(n, r) == shifted_legendre_by_substitution(n, r)
    print(n, same, inner_product(p, p, r))          # norm is r/(2n+1)

print([inner_product(shifted_legendre(2, r), shifted_legendre(m, r), r) for m in range(5)])

# r^n q int_0^r P_n e^x against its Cauchy-Schwarz bound
eps = Fraction(1, 10**30)
for n in range(3, 13):
    c = coefficient_enclosure(n, 2, 1, eps)
    print(f"n={n:2d}  coefficient ~ {sci_approx(c.lo)}   bound {sci_approx(cbs_bound(n, 2, 1))}")
print("bound drops below 1 at n =", minimal_n_cbs(2, 1))
