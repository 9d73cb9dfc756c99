"""
Ruling out rational values of pi
================================

For a candidate a/b take f = x^n (a - bx)^n. If pi were a/b, the integer
(b^n F(a/b) + b^n F(0))/n! would equal (b^n/n!) int_0^(a/b) f sin, which
is strictly between 0 and 1 once n is large enough.
"""
import time

from niven import minimal_n_pi, niven_falsify, pi_bound
from niven.bigmath import sci_approx

for a, b in [(3, 1), (22, 7), (333, 106)]:
    n = minimal_n_pi(a, b)
    t = time.perf_counter()
    cert = niven_falsify(a, b)
    enc = cert.enclosed_side
    print(f"{a}/{b}: n={n}, bound {sci_approx(pi_bound(a, b, n), 3)}, "
          f"integral ~ {sci_approx(enc.lo)}, {cert.verdict} via {cert.mechanism} "
          f"({time.perf_counter() - t:.1f}s)")

# a small n that is not yet enough: still falsified, but only because the
# integer and the real number happen to differ
cert = niven_falsify(22, 7, n=3)
print(cert.mechanism, cert.integer_side, sci_approx(cert.enclosed_side.lo))

# 355/113 needs n = 342566; uncomment to run it (about 15 s)
# print(niven_falsify(355, 113).verdict)
