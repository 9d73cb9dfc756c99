"""
Why the same trick stalls for e^2
=================================

For e^r the geometric-series estimate of the scaled tail is
r^(q+1) / (q+1-r). At r = 1 this is 1/q, but at r = 2 it is above 1
for every q, so it proves nothing.
"""
from niven import naive_er_bound
from niven.bigmath import sci_approx

for r in (1, 2, 3):
    row = []
    for q in range(r, r + 6):
        bound, fails = naive_er_bound(r, q)
        row.append(f"{sci_approx(bound, 3)}{'!' if fails else ''}")
    print(f"r={r}:", "  ".join(row))

print(naive_er_bound(2, 4))   # (Fraction(32, 3), True)
