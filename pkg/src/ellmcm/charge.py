"""Charges (rank, degree) on an elliptic curve and integer 2x2 lattice maps.

A charge is the class of a bundle in K_0(E) modulo the radical of the Euler
form, i.e. just the pair (rank, degree).  The grading shift on MCM modules
acts on charges through an element of SL_2(Z); this module produces those
matrices and does the exact integer bookkeeping around them.
"""
from __future__ import annotations

from typing import NamedTuple, Optional

from .errors import UnsupportedDegree


class Charge(NamedTuple):
    rank: int
    degree: int

    def __neg__(self) -> "Charge":
        return Charge(-self.rank, -self.degree)


class LatticeMap(NamedTuple):
    """Integer matrix [[a, b], [c, d]] acting on column charges (rank, degree)."""

    a: int
    b: int
    c: int
    d: int

    @classmethod
    def from_rows(cls, rows) -> "LatticeMap":
        (a, b), (c, d) = rows
        return cls(int(a), int(b), int(c), int(d))

    def rows(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.a, self.b), (self.c, self.d))

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    @property
    def trace(self) -> int:
        return self.a + self.d

    def __matmul__(self, other: "LatticeMap") -> "LatticeMap":
        if not isinstance(other, LatticeMap):
            return NotImplemented
        return compose(self, other)

    def __neg__(self) -> "LatticeMap":
        return LatticeMap(-self.a, -self.b, -self.c, -self.d)


IDENTITY = LatticeMap(1, 0, 0, 1)


def check_degree(n: int) -> None:
    if n in (1, 2) or n >= 4:
        return
    raise UnsupportedDegree(n)


def check_normal_degree(n: int) -> None:
    """Gate for the elliptic normal curve machinery, which needs n >= 4."""
    if n < 4:
        raise UnsupportedDegree(n, allowed="n >= 4")


def shift_matrix(n: int) -> LatticeMap:
    """The matrix B^n A = [[1, -1], [n, 1 - n]] of the twist composite, any n != 3."""
    check_degree(n)
    return LatticeMap(1, -1, n, 1 - n)


def sigma_matrix(n: int) -> LatticeMap:
    """Matrix of the grading shift on charges.

    n >= 4 and n = 2 give [[1, -1], [n, 1 - n]].  For n = 1 the matrix
    [[0, -1], [1, 1]] is returned as displayed for the E8-tilde cone.  It is
    the transpose of the inverse of ``shift_matrix(1)`` and has the same
    order, but its orbits on charges differ; see ``minell`` for which one
    the fundamental domain uses.
    """
    check_degree(n)
    if n == 1:
        return LatticeMap(0, -1, 1, 1)
    return LatticeMap(1, -1, n, 1 - n)


def apply(m: LatticeMap, z) -> Charge:
    r, d = z
    return Charge(m.a * r + m.b * d, m.c * r + m.d * d)


def compose(m: LatticeMap, k: LatticeMap) -> LatticeMap:
    return LatticeMap(
        m.a * k.a + m.b * k.c,
        m.a * k.b + m.b * k.d,
        m.c * k.a + m.d * k.c,
        m.c * k.b + m.d * k.d,
    )


def inverse(m: LatticeMap) -> LatticeMap:
    det = m.det
    if det not in (1, -1):
        raise ValueError(f"matrix {m.rows()} is not invertible over Z (det={det})")
    # det is +-1, so dividing by it is multiplying by it
    return LatticeMap(m.d * det, -m.b * det, -m.c * det, m.a * det)


def power(m: LatticeMap, k: int) -> LatticeMap:
    if k < 0:
        m, k = inverse(m), -k
    result = IDENTITY
    base = m
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def finite_order(m: LatticeMap, bound: int) -> Optional[int]:
    if bound < 1:
        raise ValueError("bound must be >= 1")
    acc = m
    for k in range(1, bound + 1):
        if acc == IDENTITY:
            return k
        acc = compose(acc, m)
    return None


def euler_pairing(z1, z2) -> int:
    r1, d1 = z1
    r2, d2 = z2
    return r1 * d2 - d1 * r2
