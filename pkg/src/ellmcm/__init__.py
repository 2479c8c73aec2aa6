"""Exact computations for maximal Cohen-Macaulay modules over elliptic cone singularities.

The cone over an elliptic curve embedded in degree n >= 4 is handled through
charges (rank, degree) of vector bundles, exact arithmetic in Q(sqrt(n^2 - 4n))
and the bundles K_j. The minimally elliptic cases n = 1, 2 live in ``minell``.
"""
from .betti import BettiTable, ModuleDescriptor, betti_entry, betti_table, growth_class, shape_report
from .charge import Charge, LatticeMap, euler_pairing, shift_matrix, sigma_matrix
from .cohom import GENERIC, BundleCohomology, SpecialityOracle, cohomology_dims
from .errors import EllMCMError
from .kbundle import (NONPOSITIVE, POSITIVE, JumpReport, SSeqSpec, closed_form, detect_jump, k_charge,
                      s_value, s_window)
from .koszul import is_cokoszul, is_koszul, koszul_charge_predicate, koszul_region, ulrich_data
from .minell import MinellInput, betti_table_minell, fundamental_domain_reduce, hilbert_series_minell
from .qfield import QuadNum, mu
from .series import IntPolynomial, RationalFunction, hilbert_koszul_module, hilbert_R, poincare_koszul, series_coeffs

__version__ = "0.1.0"

__all__ = [
    "BettiTable",
    "ModuleDescriptor",
    "betti_entry",
    "betti_table",
    "growth_class",
    "shape_report",
    "Charge",
    "LatticeMap",
    "euler_pairing",
    "shift_matrix",
    "sigma_matrix",
    "GENERIC",
    "BundleCohomology",
    "SpecialityOracle",
    "cohomology_dims",
    "EllMCMError",
    "NONPOSITIVE",
    "POSITIVE",
    "JumpReport",
    "SSeqSpec",
    "closed_form",
    "detect_jump",
    "k_charge",
    "s_value",
    "s_window",
    "is_cokoszul",
    "is_koszul",
    "koszul_charge_predicate",
    "koszul_region",
    "ulrich_data",
    "MinellInput",
    "betti_table_minell",
    "fundamental_domain_reduce",
    "hilbert_series_minell",
    "QuadNum",
    "mu",
    "IntPolynomial",
    "RationalFunction",
    "hilbert_koszul_module",
    "hilbert_R",
    "poincare_koszul",
    "series_coeffs",
]
