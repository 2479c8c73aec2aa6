"""Minimal elliptic singularities: E8-tilde (n = 1) and E7-tilde (n = 2).

Here the grading shift acts on charges with finite order (6, resp. 4) and
the resolution is periodic, beta_{i+1,j} = beta_{i,j-3} (n = 1) or
beta_{i,j-2} (n = 2), so a whole Betti table is determined by its first
row beta_{0,*}.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .betti import BettiTable
from .charge import Charge, LatticeMap, apply, finite_order, power, shift_matrix
from .errors import DomainAmbiguity, InvalidAtiyahFlag, UnsupportedDegree, ZeroCharge
from .series import (IntPolynomial, MinellInvariants, RationalFunction, hilbert_minell_module,
                     rank_multiplicity_minell)

PERIOD = {1: 3, 2: 2}
ORDER = {1: 6, 2: 4}


def _check(n: int) -> None:
    if n not in PERIOD:
        raise UnsupportedDegree(n, allowed="n in {1, 2}")


def orbit_matrix(n: int) -> LatticeMap:
    """Action on charges used for the fundamental-domain normal form.

    This is [[1, -1], [n, 1 - n]]: for n = 2 it coincides with
    ``sigma_matrix(2)``; for n = 1 it is the transpose-inverse of the
    displayed ``sigma_matrix(1)``, the variant whose orbits each meet the
    domain 0 <= d < r exactly once.
    """
    _check(n)
    return shift_matrix(n)


def in_fundamental_domain(n: int, z) -> bool:
    r, d = z
    return r > 0 and 0 <= d < n * r


def orbit(n: int, z) -> list[Charge]:
    m = orbit_matrix(n)
    out = [Charge(*z)]
    for _ in range(ORDER[n] - 1):
        nxt = apply(m, out[-1])
        if nxt == out[0]:
            break
        out.append(nxt)
    return out


def fundamental_domain_reduce(n: int, z) -> tuple[Charge, int]:
    """(reduced, k) with reduced = M^k z in the fundamental domain, k minimal."""
    _check(n)
    z = Charge(*z)
    if z == (0, 0):
        raise ZeroCharge("the zero charge has no fundamental-domain representative")
    hits = [(k, w) for k, w in enumerate(orbit(n, z)) if in_fundamental_domain(n, w)]
    if len(hits) != 1:
        raise DomainAmbiguity(f"orbit of {tuple(z)} meets the fundamental domain {len(hits)} times")
    k, w = hits[0]
    return w, k


@dataclass(frozen=True)
class MinellInput:
    n: int
    charge: Charge
    atiyah: bool = False
    shift: int = 0

    def __post_init__(self):
        _check(self.n)
        object.__setattr__(self, "charge", Charge(*self.charge))
        if not in_fundamental_domain(self.n, self.charge):
            raise ValueError(f"charge {tuple(self.charge)} is outside the fundamental domain; "
                             "use MinellInput.reduce")
        if self.atiyah and self.charge.degree != 0:
            raise InvalidAtiyahFlag("the Atiyah bundle F_r has degree 0")

    @classmethod
    def reduce(cls, n: int, z, atiyah: bool = False, shift: int = 0) -> tuple["MinellInput", int]:
        w, k = fundamental_domain_reduce(n, z)
        return cls(n, w, atiyah, shift), k

    def as_dict(self) -> dict:
        return {"n": self.n, "r": self.charge.rank, "d": self.charge.degree,
                "atiyah": self.atiyah, "l": self.shift}


def betti_row0(inp: MinellInput) -> list[int]:
    """beta_{0,0}, ..., beta_{0,n+2} of Phi(F) (shift l = 0)."""
    r, d = inp.charge
    if inp.n == 1:
        return [1, r, r, 1] if inp.atiyah else [0, r, r - d, d]
    return [1, 2 * r, 1] if inp.atiyah else [0, 2 * r - d, d]


def generator_row(inp: MinellInput) -> dict[int, int]:
    """beta_{0,j} for the shifted module Phi(F[l]): the l = 0 row moved by -period*l."""
    off = -PERIOD[inp.n] * inp.shift
    return {j + off: v for j, v in enumerate(betti_row0(inp)) if v}


def generator_window(n: int, l: int) -> tuple[int, int]:
    """Internal degrees outside which beta_{0,j} vanishes for Phi(F[l])."""
    _check(n)
    if n == 1:
        return -2 - 3 * l, 3 - 3 * l
    return -1 - 2 * l, 2 - 2 * l


def betti_table_minell(inp: MinellInput, window: tuple[int, int],
                       i_window: Optional[tuple[int, int]] = None) -> BettiTable:
    lo, hi = window
    per = PERIOD[inp.n]
    row = generator_row(inp)
    entries = {}
    for j in range(lo, hi + 1):
        for j0, v in row.items():
            # beta_{i,j} = beta_{0,j - per*i}
            if (j - j0) % per == 0:
                i = (j - j0) // per
                if i_window is None or i_window[0] <= i <= i_window[1]:
                    entries[(i, j)] = v
    return BettiTable((lo, hi), entries, inp.as_dict())


def generator_polynomial(inp: MinellInput) -> tuple[IntPolynomial, int]:
    """(B, k) with sum_j beta_{0,j} t^j = t^k * B(t) and B(0) possibly zero only if k = 0."""
    row = generator_row(inp)
    k = min(row) if min(row) < 0 else 0
    coeffs = [0] * (max(row) - k + 1)
    for j, v in row.items():
        coeffs[j - k] = v
    return IntPolynomial(coeffs), k


def hilbert_series_minell(inp: MinellInput) -> tuple[RationalFunction, int]:
    """Hilbert series as (H, k): the module's series is t^k * H(t)."""
    B, k = generator_polynomial(inp)
    return hilbert_minell_module(inp.n, B), k


def invariants_minell(inp: MinellInput) -> MinellInvariants:
    B, _ = generator_polynomial(inp)
    inv = rank_multiplicity_minell(B)
    r = inp.charge.rank
    expect = (2 * (r + 1), 2 * (r + 1), r + 1) if inp.atiyah else (2 * r, 2 * r, r)
    got = (inv.multiplicity, inv.generators, inv.rank)
    if got != expect:
        raise AssertionError(f"invariants {got} disagree with closed forms {expect}")
    return inv


def sigma_order(n: int) -> Optional[int]:
    return finite_order(orbit_matrix(n), 12)


def orbit_power(n: int, z, k: int) -> Charge:
    return apply(power(orbit_matrix(n), k), z)
