"""Exact arithmetic in Q(sqrt(D)).

Only what is needed to decide the strict and non-strict threshold
inequalities exactly: field operations and an exact sign test that never
touches floating point.
"""
from __future__ import annotations

from fractions import Fraction
from math import isqrt
from numbers import Rational

from .errors import DivisionByZero, MixedDiscriminant, UnsupportedDegree


def _is_square(D: int) -> bool:
    return D >= 0 and isqrt(D) ** 2 == D


class QuadNum:
    """The number a + b*sqrt(D) with a, b rational and D >= 0.

    Perfect-square discriminants are folded into the rational part on
    construction, so equality is plain structural comparison.
    """

    __slots__ = ("a", "b", "D")

    def __init__(self, a=0, b=0, D: int = 0):
        if D < 0:
            raise ValueError("discriminant must be nonnegative")
        a, b = Fraction(a), Fraction(b)
        if _is_square(D) and b:
            a += b * isqrt(D)
            b = Fraction(0)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "D", int(D))

    def __setattr__(self, name, value):
        raise AttributeError("QuadNum is immutable")

    def _coerce(self, other) -> "QuadNum":
        if isinstance(other, QuadNum):
            if other.D != self.D:
                raise MixedDiscriminant(f"cannot combine sqrt({self.D}) with sqrt({other.D})")
            return other
        if isinstance(other, (int, Rational)):
            return QuadNum(other, 0, self.D)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(self.a + o.a, self.b + o.b, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.D)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(self.a - o.a, self.b - o.b, self.D)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(self.a * o.a + self.b * o.b * self.D, self.a * o.b + self.b * o.a, self.D)

    __rmul__ = __mul__

    def conjugate(self) -> "QuadNum":
        return QuadNum(self.a, -self.b, self.D)

    def norm(self) -> Fraction:
        return self.a * self.a - self.b * self.b * self.D

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if o.is_zero():
            raise DivisionByZero("division by zero in Q(sqrt(%d))" % self.D)
        nrm = o.norm()
        num = self * o.conjugate()
        return QuadNum(num.a / nrm, num.b / nrm, self.D)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else QuadNum(1, 0, self.D) / self
        k = abs(k)
        result = QuadNum(1, 0, self.D)
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_rational(self) -> bool:
        return self.b == 0

    def __eq__(self, other):
        if isinstance(other, QuadNum):
            return (self.a, self.b, self.D) == (other.a, other.b, other.D)
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.D))

    def __lt__(self, other):
        return sign(self - other) < 0

    def __le__(self, other):
        return sign(self - other) <= 0

    def __gt__(self, other):
        return sign(self - other) > 0

    def __ge__(self, other):
        return sign(self - other) >= 0

    def __float__(self):
        return float(self.a) + float(self.b) * self.D ** 0.5

    def __repr__(self):
        return f"QuadNum({self.a}, {self.b}, D={self.D})"

    def __str__(self):
        if self.b == 0:
            return str(self.a)
        if self.a == 0:
            return f"{self.b}*sqrt({self.D})"
        op = "+" if self.b > 0 else "-"
        return f"{self.a} {op} {abs(self.b)}*sqrt({self.D})"


def sign(x: QuadNum) -> int:
    """Exact sign of a + b*sqrt(D) using only rational comparisons."""
    a, b, D = x.a, x.b, x.D
    sa = (a > 0) - (a < 0)
    sb = (b > 0) - (b < 0) if D else 0
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: the part with the larger square wins
    lhs, rhs = a * a, b * b * D
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0


def quad_arith(x: QuadNum, y: QuadNum, op: str) -> QuadNum:
    ops = {"add": QuadNum.__add__, "sub": QuadNum.__sub__,
           "mul": QuadNum.__mul__, "div": QuadNum.__truediv__}
    if op not in ops:
        raise ValueError(f"unknown op {op!r}")
    if not isinstance(y, QuadNum) or not isinstance(x, QuadNum):
        raise TypeError("quad_arith takes two QuadNum values")
    return ops[op](x, y)


def discriminant(n: int) -> int:
    return n * n - 4 * n


def mu(n: int) -> QuadNum:
    """Larger root of x^2 - (n-2)x + 1 = 0, exactly."""
    if n < 4:
        raise UnsupportedDegree(n, allowed="n >= 4")
    return QuadNum(Fraction(n - 2, 2), Fraction(1, 2), discriminant(n))
