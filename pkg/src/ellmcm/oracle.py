"""Deliberately naive reference computations used to cross-check the main path.

Nothing here calls kbundle, betti or koszul code paths; the only shared
pieces are value types (Charge, LatticeMap, QuadNum, JumpReport) and the two
side names.
"""
from __future__ import annotations

from fractions import Fraction

from .charge import Charge, LatticeMap, apply, power
from .errors import NonIntegralValue, ScanBudgetExceeded, UnsupportedDegree
from .kbundle import NONPOSITIVE, POSITIVE, JumpReport
from .qfield import QuadNum


def _gate(n):
    if n < 4:
        raise UnsupportedDegree(n, allowed="n >= 4")


def charge_by_matrix_power(n: int, j: int) -> Charge:
    """(r_j, d_j) = (-c_n)^j (-1, 0) for j > 0 and (-c_n^-1)^|j| (1, 0) for j <= 0."""
    _gate(n)
    neg_c = LatticeMap(-1, 1, -n, n - 1)
    if j > 0:
        return apply(power(neg_c, j), (-1, 0))
    return apply(power(neg_c, j), (1, 0))


def sequence_by_iteration(initials, n: int, j: int, start: int = 1) -> int:
    """Value at index j of x_{k+1} = (n-2) x_k - x_{k-1} with x_start, x_start+1 = initials."""
    a, b = initials
    if j >= start:
        for _ in range(j - start):
            a, b = b, (n - 2) * b - a
        return a
    for _ in range(start - j):
        a, b = (n - 2) * a - b, a
    return a


def closed_form_eval(A, B, n: int, j: int) -> int:
    if n == 4:
        val = Fraction(A) * j + Fraction(B)
        if val.denominator != 1:
            raise NonIntegralValue(f"A*j + B = {val} is not an integer")
        return int(val)
    _gate(n)
    D = n * n - 4 * n
    m = QuadNum(Fraction(n - 2, 2), Fraction(1, 2), D)
    m_inv = QuadNum(Fraction(n - 2, 2), Fraction(-1, 2), D)
    up, down = (m, m_inv) if j >= 0 else (m_inv, m)
    pa, pb = QuadNum(1, 0, D), QuadNum(1, 0, D)
    for _ in range(abs(j)):
        pa, pb = pa * up, pb * down
    val = A * pa + B * pb
    if not isinstance(val, QuadNum):
        val = QuadNum(val, 0, D)
    if val.b != 0 or val.a.denominator != 1:
        raise NonIntegralValue(f"closed form gives non-integer {val} at j={j}")
    return int(val.a)


def _initials(spec, side):
    n, p, q = spec.n, spec.p, spec.q
    if side == POSITIVE:
        return (p * n - q, p * (n * n - 2 * n) - q * (n - 1)), 1
    return (-q, p * n - q * (n - 1)), 0


def naive_terms(spec, side, count: int) -> list[tuple[int, int]]:
    """(index, value) pairs for the first ``count`` terms of a side, outward."""
    (a, b), start = _initials(spec, side)
    n = spec.n
    out = []
    step = 1 if side == POSITIVE else -1
    j = start
    for _ in range(count):
        out.append((j, a))
        a, b = b, (n - 2) * b - a
        j += step
    return out


def count_sign_changes(terms) -> int:
    """Zeros count as one change point; otherwise consecutive opposite nonzero signs."""
    changes = 0
    prev = 0
    for _, v in terms:
        sg = (v > 0) - (v < 0)
        if sg == 0:
            changes += 1
            prev = 0
            continue
        if prev and sg != prev:
            changes += 1
        prev = sg
    return changes


def naive_jump_scan(spec, side, budget: int = 10_000) -> JumpReport:
    """Scan exactly ``budget`` terms of one side and report the first sign change.

    A change or zero sitting on the last scanned term cannot be confirmed and
    raises ScanBudgetExceeded.
    """
    if side not in (POSITIVE, NONPOSITIVE):
        raise ValueError(side)
    terms = naive_terms(spec, side, budget)
    bracket = None
    at_integer = False
    prev_j, prev_sign = None, 0
    for idx, (j, v) in enumerate(terms):
        sg = (v > 0) - (v < 0)
        if sg == 0 or (prev_sign and sg != prev_sign):
            if idx == len(terms) - 1:
                raise ScanBudgetExceeded(f"sign change at the edge of a {budget}-term scan")
            if bracket is None:
                if sg == 0:
                    bracket, at_integer = j, True
                else:
                    bracket = (min(prev_j, j), max(prev_j, j))
        if sg:
            prev_j, prev_sign = j, sg
    return JumpReport(side=side, exists=bracket is not None, bracket=bracket,
                      at_integer=at_integer, chamber="unclassified", tail_sign=prev_sign,
                      scanned=len(terms))
