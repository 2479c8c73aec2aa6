"""
Hilbert and Poincare series of Koszul modules
=============================================

For a Koszul module M the Poincare series S(t) has the diagonal Betti
numbers as coefficients, and S(-t) H_R(t) = H_M(t).
"""
from ellmcm import betti_entry, ModuleDescriptor
from ellmcm.series import hilbert_koszul_module, hilbert_R, poincare_koszul, series_coeffs

n, z = 5, (1, 4)
S = poincare_koszul(n, z)
print("S(t)   =", S, series_coeffs(S, 6))
print("betti  =", [betti_entry(ModuleDescriptor(n, z), i, i) for i in range(7)])
print("H_R(t) =", hilbert_R(n))
print("H_M(t) =", hilbert_koszul_module(n, z))
print("S(-t) H_R(t) == H_M(t):", S.substitute_neg() * hilbert_R(n) == hilbert_koszul_module(n, z))

# maximally generated case p n = q
print("(1, 5):", poincare_koszul(5, (1, 5)), hilbert_koszul_module(5, (1, 5)))
