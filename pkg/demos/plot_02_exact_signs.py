"""
Exact signs in Q(sqrt(D))
=========================

The growth rate mu = ((n-2) + sqrt(n^2 - 4n)) / 2 is irrational for n > 4.
Deciding the Koszul inequality needs the exact sign of a + b sqrt(D); floats
can get it wrong when the two parts nearly cancel.
"""
from fractions import Fraction
from math import isqrt

from ellmcm.qfield import QuadNum, mu, sign

m = mu(5)
print("mu(5) =", m, "~", float(m))
print("mu^2 - 3 mu + 1 =", m * m - 3 * m + 1)
print("mu * conjugate =", m * m.conjugate())

# a near-cancellation: the 20-digit truncation of sqrt(5) is below sqrt(5)
# by about 1e-21, far under double precision
a = Fraction(isqrt(5 * 10 ** 40), 10 ** 20)
x = QuadNum(a, -1, 5)
print("a - sqrt(5): exact sign", sign(x), "float difference", float(a) - 5 ** 0.5)

# the comparison behind the Koszul test for n = 5, (4, 5): mu * 0 + 5 > 0
print("sign(mu * s_-1 - s_0) for (4, 5):", sign(m * 0 + 5))
