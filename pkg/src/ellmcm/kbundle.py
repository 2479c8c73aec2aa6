"""Charges of the bundles K_j and the degree sequences s_j of a bundle.

For a bundle F of charge (p, q) on an elliptic normal curve of degree n >= 4,
``s_j = deg(F^vee (x) K_j) = p*d_j - q*r_j``.  Both (r_j, d_j) and s_j obey
``x_{j+1} = (n-2) x_j - x_{j-1}``, but the sides j > 0 and j <= 0 start from
different initial values and are handled as two one-sided sequences.
"""
from __future__ import annotations

import math
import threading
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .charge import Charge, check_normal_degree
from .errors import ScanBudgetExceeded
from .qfield import QuadNum, mu, sign

POSITIVE = "positive"
NONPOSITIVE = "nonpositive"
SIDES = (POSITIVE, NONPOSITIVE)

DEFAULT_SCAN_BUDGET = 10_000

_cache_lock = threading.Lock()
# n -> ([(r_j, d_j) for j = 0, 1, 2, ...], [(r_j, d_j) for j = 0, -1, -2, ...])
_k_cache: dict[int, tuple[list, list]] = {}


def _side_seeds(n: int):
    positive = [Charge(1, 0), Charge(1, n), Charge(n - 1, n * n - 2 * n)]
    nonpositive = [Charge(1, 0), Charge(n - 1, n)]
    return positive, nonpositive


def k_charge(n: int, j: int) -> Charge:
    """(r_j, d_j), the charge of K_j."""
    check_normal_degree(n)
    with _cache_lock:
        pos, neg = _k_cache.setdefault(n, _side_seeds(n))
        seq, idx = (pos, j) if j > 0 else (neg, -j)
        while len(seq) <= idx:
            (r0, d0), (r1, d1) = seq[-2], seq[-1]
            seq.append(Charge((n - 2) * r1 - r0, (n - 2) * d1 - d0))
        return seq[idx]


def _check_side(side: str) -> None:
    if side not in SIDES:
        raise ValueError(f"side must be one of {SIDES}, got {side!r}")


@dataclass(frozen=True)
class SSeqSpec:
    n: int
    p: int
    q: int

    def __post_init__(self):
        check_normal_degree(self.n)
        if self.p <= 0:
            raise ValueError(f"rank p must be positive for a vector bundle, got {self.p}")

    @property
    def charge(self) -> Charge:
        return Charge(self.p, self.q)


def s_value(spec: SSeqSpec, j: int) -> int:
    r, d = k_charge(spec.n, j)
    return spec.p * d - spec.q * r


def s_window(spec: SSeqSpec, j_lo: int, j_hi: int) -> list[int]:
    return [s_value(spec, j) for j in range(j_lo, j_hi + 1)]


Coefficients = Union[tuple[QuadNum, QuadNum], tuple[Fraction, Fraction]]


def closed_form(spec: SSeqSpec, side: str) -> Coefficients:
    """Coefficients (A, B) with s_j = A mu^j + B mu^-j (n > 4) or A j + B (n = 4).

    The formulas solve the 2x2 system given by the two boundary values of
    the chosen side: (s_1, s_2) for j > 0 and (s_0, s_-1) for j <= 0.
    """
    _check_side(side)
    n = spec.n
    if side == POSITIVE:
        s1, s2 = s_value(spec, 1), s_value(spec, 2)
    else:
        s0, sm1 = s_value(spec, 0), s_value(spec, -1)
    if n == 4:
        if side == POSITIVE:
            return Fraction(s2 - s1), Fraction(2 * s1 - s2)
        return Fraction(s0 - sm1), Fraction(s0)
    m = mu(n)
    den = m * m - 1
    if side == POSITIVE:
        A = (m * s2 - s1) / (m * den)
        B = m * m * (m * s1 - s2) / den
    else:
        A = m * (m * s0 - sm1) / den
        B = (m * sm1 - s0) / den
    return A, B


def closed_form_value(spec: SSeqSpec, coeffs: Coefficients, j: int):
    A, B = coeffs
    if spec.n == 4:
        return A * j + B
    m = mu(spec.n)
    return A * m ** j + B * m ** (-j)


@dataclass(frozen=True)
class JumpReport:
    side: str
    exists: bool
    bracket: Union[tuple[int, int], int, None]
    at_integer: bool
    chamber: str
    tail_sign: int = 0
    float_location: Optional[float] = None
    scanned: int = 0

    def __post_init__(self):
        if not self.exists and self.bracket is not None:
            raise ValueError("a report without a jump cannot carry a bracket")
        if self.at_integer and not isinstance(self.bracket, int):
            raise ValueError("an integer jump must carry its position")

    def same_jump(self, other: "JumpReport") -> bool:
        return (self.side, self.exists, self.bracket, self.at_integer) == (
            other.side, other.exists, other.bracket, other.at_integer)


def _outward(side: str, m: int) -> int:
    """Index of the m-th term counted from the boundary of a side."""
    return 1 + m if side == POSITIVE else -m


def _strict(x) -> int:
    return sign(x) if isinstance(x, QuadNum) else (x > 0) - (x < 0)


def jump_chamber(spec: SSeqSpec, side: str) -> str:
    """Which of the two jump systems of linear inequalities the charge satisfies.

    Returns "system-1", "system-2", "none", "origin" (s_0 = 0 on the
    nonpositive side) or "boundary" when one of the defining expressions
    vanishes exactly.  This is descriptive metadata; the jump itself is
    located by ``detect_jump``.
    """
    _check_side(side)
    n = spec.n
    # (e1, e2) with system-1 <=> e1 > 0 and e2 > 0, system-2 <=> both < 0
    if side == POSITIVE:
        s1, s2 = s_value(spec, 1), s_value(spec, 2)
        if n == 4:
            e1, e2 = s1 - s2, 2 * s1 - s2
        else:
            m = mu(n)
            e1 = s1 - m * s2
            e2 = (m * m * s1 - s2) - e1 / m ** 3
    else:
        s0, sm1 = s_value(spec, 0), s_value(spec, -1)
        if s0 == 0:
            return "origin"
        if n == 4:
            e1, e2 = -s0, sm1 - s0
        else:
            e1, e2 = s0 - mu(n) * sm1, -s0
    s1_, s2_ = _strict(e1), _strict(e2)
    if s1_ == 0 or s2_ == 0:
        return "boundary"
    if s1_ > 0 and s2_ > 0:
        return "system-1"
    if s1_ < 0 and s2_ < 0:
        return "system-2"
    return "none"


def _float_location(spec: SSeqSpec, side: str) -> Optional[float]:
    A, B = closed_form(spec, side)
    a, b = float(A), float(B)
    if a == 0:
        return None
    if spec.n == 4:
        return -b / a
    ratio = -b / a
    if ratio <= 0:
        return None
    return 0.5 * math.log(ratio) / math.log(float(mu(spec.n)))


def detect_jump(spec: SSeqSpec, side: str, budget: int = DEFAULT_SCAN_BUDGET) -> JumpReport:
    """Locate the sign change of s_j on one side, exactly.

    Terms are generated outward from the boundary of the side.  The scan
    stops once a nonzero term t and its successor t' satisfy
    sign(t) * (mu t' - t) >= 0 with matching signs: from there on the
    sequence keeps its sign and grows in absolute value, so no later sign
    change is possible.
    """
    _check_side(side)
    m_ = mu(spec.n)
    prev_sign = 0
    prev_index = None
    bracket = None
    at_integer = False
    term = s_value(spec, _outward(side, 0))
    for m in range(budget):
        j = _outward(side, m)
        nxt = s_value(spec, _outward(side, m + 1))
        sg = (term > 0) - (term < 0)
        if sg == 0:
            if bracket is None:
                bracket, at_integer = j, True
        else:
            if prev_sign and sg != prev_sign and bracket is None:
                bracket = (min(prev_index, j), max(prev_index, j))
            prev_sign, prev_index = sg, j
            if sg * ((nxt > 0) - (nxt < 0)) > 0 and sign((m_ * nxt - term) * sg) >= 0:
                return JumpReport(
                    side=side,
                    exists=bracket is not None,
                    bracket=bracket,
                    at_integer=at_integer,
                    chamber=jump_chamber(spec, side),
                    tail_sign=sg,
                    float_location=_float_location(spec, side),
                    scanned=m + 2,
                )
        term = nxt
    raise ScanBudgetExceeded(f"no stable sign within {budget} terms for {spec} ({side})")
