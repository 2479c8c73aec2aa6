"""Exact rational functions in one variable t and the Hilbert/Poincare series.

Polynomials are integer coefficient tuples in ascending powers of t.  A
RationalFunction is kept in a canonical form: common factors over Q removed,
numerator and denominator jointly primitive, and the lowest-order nonzero
coefficient of the denominator positive.  Equal functions therefore compare
equal structurally, whichever printed form they were built from.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd
from typing import Iterable, Sequence

from .charge import Charge, check_degree
from .errors import (DivisionByZero, NonIntegralCoefficient, NotKoszul, OddGeneratorCount,
                     PoleAtZero, UnsupportedDegree)


def _strip(coeffs) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class IntPolynomial(tuple):
    """Integer polynomial, ascending coefficients, no trailing zeros."""

    def __new__(cls, coeffs: Iterable[int] = ()):
        return super().__new__(cls, (int(c) for c in _strip(coeffs)))

    @property
    def degree(self) -> int:
        return len(self) - 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self):
            acc = acc * t + c
        return acc

    def __add__(self, other):
        return IntPolynomial(_padd(self, other))

    def __sub__(self, other):
        return IntPolynomial(_padd(self, [-c for c in other]))

    def __mul__(self, other):
        return IntPolynomial(_pmul(self, other))

    def __neg__(self):
        return IntPolynomial(-c for c in self)

    def __repr__(self):
        return f"IntPolynomial({list(self)})"


def monomial(k: int, c: int = 1) -> IntPolynomial:
    return IntPolynomial([0] * k + [c])


def _padd(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def _pmul(a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pdivmod(a: Sequence[Fraction], b: Sequence[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    lead = b[-1]
    while len(a) >= len(b) and a:
        k = len(a) - len(b)
        f = a[-1] / lead
        q[k] = f
        for i, c in enumerate(b):
            a[i + k] -= f * c
        a = list(_strip(a))
    return q, a


def _pgcd(a, b):
    a = [Fraction(c) for c in _strip(a)]
    b = [Fraction(c) for c in _strip(b)]
    while b:
        _, r = _pdivmod(a, b)
        a, b = b, r
    return a


def _primitive_pair(num, den):
    """Scale both to integers sharing no common content; fix the sign."""
    nums = [Fraction(c) for c in num]
    dens = [Fraction(c) for c in den]
    lcm = 1
    for c in nums + dens:
        lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    ni = [int(c * lcm) for c in nums]
    di = [int(c * lcm) for c in dens]
    g = reduce(gcd, ni + di, 0) or 1
    ni = [c // g for c in ni]
    di = [c // g for c in di]
    low = next(c for c in di if c != 0)
    if low < 0:
        ni, di = [-c for c in ni], [-c for c in di]
    return IntPolynomial(ni), IntPolynomial(di)


class RationalFunction:
    __slots__ = ("numerator", "denominator")

    def __init__(self, numerator, denominator=(1,)):
        num, den = _strip(numerator), _strip(denominator)
        if not den:
            raise DivisionByZero("zero denominator")
        if not num:
            object.__setattr__(self, "numerator", IntPolynomial())
            object.__setattr__(self, "denominator", IntPolynomial([1]))
            return
        g = _pgcd(num, den)
        if len(g) > 1:
            num, _ = _pdivmod([Fraction(c) for c in num], g)
            den, _ = _pdivmod([Fraction(c) for c in den], g)
        n, d = _primitive_pair(num, den)
        object.__setattr__(self, "numerator", n)
        object.__setattr__(self, "denominator", d)

    def __setattr__(self, name, value):
        raise AttributeError("RationalFunction is immutable")

    @classmethod
    def const(cls, c: int) -> "RationalFunction":
        return cls([c])

    def _lift(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, int):
            return RationalFunction([other])
        if isinstance(other, (tuple, list)):
            return RationalFunction(other)
        return NotImplemented

    def __add__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RationalFunction(
            _padd(_pmul(self.numerator, o.denominator), _pmul(o.numerator, self.denominator)),
            _pmul(self.denominator, o.denominator))

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction([-c for c in self.numerator], self.denominator)

    def __sub__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        return RationalFunction(_pmul(self.numerator, o.numerator),
                                _pmul(self.denominator, o.denominator))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is NotImplemented:
            return o
        if o.is_zero():
            raise DivisionByZero("division by the zero rational function")
        return RationalFunction(_pmul(self.numerator, o.denominator),
                                _pmul(self.denominator, o.numerator))

    def is_zero(self) -> bool:
        return not self.numerator

    def substitute_neg(self) -> "RationalFunction":
        """f(-t)."""
        flip = lambda p: [c if k % 2 == 0 else -c for k, c in enumerate(p)]
        return RationalFunction(flip(self.numerator), flip(self.denominator))

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return (self.numerator, self.denominator) == (other.numerator, other.denominator)
        return NotImplemented

    def __hash__(self):
        return hash((self.numerator, self.denominator))

    def __call__(self, t):
        return Fraction(self.numerator(Fraction(t))) / self.denominator(Fraction(t))

    def to_json(self) -> dict:
        return {"numerator": list(self.numerator), "denominator": list(self.denominator)}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        return cls(data["numerator"], data["denominator"])

    def __repr__(self):
        return f"RationalFunction({list(self.numerator)}, {list(self.denominator)})"

    def __str__(self):
        return f"({poly_str(self.numerator)}) / ({poly_str(self.denominator)})"


def poly_str(p: Sequence[int]) -> str:
    if not p:
        return "0"
    terms = []
    for k, c in enumerate(p):
        if c == 0:
            continue
        mag = abs(c)
        body = str(mag) if k == 0 else ("" if mag == 1 else str(mag)) + ("t" if k == 1 else f"t^{k}")
        terms.append(("-" if c < 0 else "+", body))
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for s, body in terms[1:]:
        out += f" {s} {body}"
    return out


def rf_arith(x: RationalFunction, y: RationalFunction, op: str) -> RationalFunction:
    ops = {"add": RationalFunction.__add__, "sub": RationalFunction.__sub__,
           "mul": RationalFunction.__mul__, "div": RationalFunction.__truediv__}
    if op not in ops:
        raise ValueError(f"unknown op {op!r}")
    return ops[op](x, y)


def series_coeffs(x: RationalFunction, N: int) -> list[int]:
    """First N+1 Taylor coefficients at t = 0, by power-series long division."""
    num, den = x.numerator, x.denominator
    if not den or den[0] == 0:
        raise PoleAtZero(f"{x} has a pole at t = 0")
    d0 = den[0]
    out: list[int] = []
    for k in range(N + 1):
        acc = num[k] if k < len(num) else 0
        for i in range(1, min(k, len(den) - 1) + 1):
            acc -= den[i] * out[k - i]
        c, rem = divmod(acc, d0)
        if rem:
            raise NonIntegralCoefficient(f"coefficient of t^{k} in {x} is {Fraction(acc, d0)}")
        out.append(c)
    return out


ONE_MINUS_T_SQ = (1, -2, 1)


def hilbert_R(n: int) -> RationalFunction:
    check_degree(n)
    if n == 1:
        # (1 - t^6) / ((1 - t)(1 - t^2)(1 - t^3)), weights 1, 2, 3 and a sextic
        return RationalFunction([1, 0, 0, 0, 0, 0, -1], _pmul(_pmul([1, -1], [1, 0, -1]), [1, 0, 0, -1]))
    if n == 2:
        return RationalFunction([1, 0, 0, 0, -1], _pmul(ONE_MINUS_T_SQ, [1, 0, -1]))
    return RationalFunction([1, n - 2, 1], ONE_MINUS_T_SQ)


def _koszul_gate(n: int, charge) -> Charge:
    from .betti import ModuleDescriptor
    from .koszul import is_koszul

    desc = ModuleDescriptor(n, Charge(*charge))
    if not is_koszul(desc):
        raise NotKoszul(f"charge {tuple(charge)} is not Koszul for n={n}")
    return desc.charge


def _s0_sm1(n: int, p: int, q: int) -> tuple[int, int]:
    return -q, p * n - q * (n - 1)


def poincare_koszul(n: int, charge) -> RationalFunction:
    """S(t) = sum_i beta_{i,i} t^i = -(s_0 + (s_-1 - (n-2)s_0) t) / (t^2 - (n-2)t + 1)."""
    p, q = _koszul_gate(n, charge)
    s0, sm1 = _s0_sm1(n, p, q)
    return RationalFunction([s0, sm1 - (n - 2) * s0], [-1, n - 2, -1])


def hilbert_koszul_module(n: int, charge) -> RationalFunction:
    p, q = _koszul_gate(n, charge)
    return RationalFunction([q, p * n - q], ONE_MINUS_T_SQ)


def minell_period_divisor(n: int) -> IntPolynomial:
    if n == 1:
        return IntPolynomial([1, 0, 0, 1])
    if n == 2:
        return IntPolynomial([1, 0, 1])
    raise UnsupportedDegree(n, allowed="n in {1, 2}")


def hilbert_minell_module(n: int, B) -> RationalFunction:
    """B(t) H_R(t) / (1 + t^3) for n = 1, B(t) H_R(t) / (1 + t^2) for n = 2."""
    period = minell_period_divisor(n)
    B = IntPolynomial(B)
    if any(c < 0 for c in B):
        raise ValueError("generator polynomial must have nonnegative coefficients")
    return RationalFunction(B) * hilbert_R(n) / RationalFunction(period)


@dataclass(frozen=True)
class MinellInvariants:
    rank: int
    multiplicity: int
    generators: int


def rank_multiplicity_minell(B) -> MinellInvariants:
    B = IntPolynomial(B)
    gens = B(1)
    if gens % 2:
        raise OddGeneratorCount(f"B(1) = {gens} is odd; not a valid generator row")
    return MinellInvariants(rank=gens // 2, multiplicity=gens, generators=gens)
