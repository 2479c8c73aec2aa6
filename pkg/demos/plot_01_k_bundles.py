"""
The bundles K_j and their charges
=================================

Every bundle K_j on the curve is pinned down by its charge (rank, degree).
The charges obey a three-term recursion, and the same numbers come out of
powers of a single 2x2 integer matrix.
"""

from ellmcm import k_charge
from ellmcm.charge import euler_pairing, shift_matrix
from ellmcm.oracle import charge_by_matrix_power

n = 5
for j in range(-4, 5):
    print(f"K_{j:<3d} {tuple(k_charge(n, j))}")

# r_{j+1} = (n-2) r_j - r_{j-1}, same for degrees
r = [k_charge(n, j).rank for j in range(0, 6)]
print("ranks", r, "check", [(n - 2) * r[k] - r[k - 1] for k in range(1, 5)])

# the independent route: (-c_n)^j applied to a fixed vector
print("matrix power agrees:", all(k_charge(n, j) == charge_by_matrix_power(n, j) for j in range(-40, 41)))

# c_n has determinant 1, so it keeps the pairing r1 d2 - d1 r2
c = shift_matrix(n)
print("c_5 =", c.rows(), "det", c.det)
print("<K_1, K_2> =", euler_pairing(k_charge(n, 1), k_charge(n, 2)))

# symmetry between the two halves of the sequence
print("deg K_3 = deg K_-3:", k_charge(n, 3).degree == k_charge(n, -3).degree)
