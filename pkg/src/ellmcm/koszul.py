"""Koszul and CoKoszul classification of MCM modules over R_E, n >= 4.

All threshold comparisons against mu are exact signs in Q(sqrt(n^2 - 4n)),
so the non-strict boundary cases (e.g. the Ulrich charges pn = q) are
decided correctly.
"""
from __future__ import annotations

from dataclasses import dataclass

from .betti import ModuleDescriptor
from .charge import Charge, check_normal_degree
from .errors import NotKoszul
from .kbundle import s_value
from .qfield import mu, sign


@dataclass(frozen=True)
class Condition:
    name: str
    value: str
    satisfied: bool

    def line(self) -> str:
        mark = "ok " if self.satisfied else "FAIL"
        return f"[{mark}] {self.name}: {self.value}"


@dataclass(frozen=True)
class KoszulVerdict:
    verdict: bool
    certificate: tuple[Condition, ...]
    kind: str = "koszul"

    def __bool__(self):
        return self.verdict


def _verdict(conds, kind):
    conds = tuple(conds)
    return KoszulVerdict(all(c.satisfied for c in conds), conds, kind)


def _sgn_word(s: int) -> str:
    return {1: "> 0", 0: "= 0", -1: "< 0"}[s]


def is_koszul(desc: ModuleDescriptor) -> KoszulVerdict:
    spec = desc.sseq
    s1, s0, sm1 = s_value(spec, 1), s_value(spec, 0), s_value(spec, -1)
    thr = sign(mu(desc.n) * sm1 - s0)
    special_at_1 = s1 == 0 and desc.speciality.is_special(1)
    return _verdict([
        Condition("s_1 >= 0, and F not F_p(1) if s_1 = 0",
                  f"s_1 = {s1}" + (" (special at position 1)" if special_at_1 else ""),
                  s1 >= 0 and not special_at_1),
        Condition("s_0 < 0", f"s_0 = {s0}", s0 < 0),
        Condition("mu*s_-1 - s_0 <= 0", f"mu*({sm1}) - ({s0}) {_sgn_word(thr)}", thr <= 0),
        Condition("l = 0", f"l = {desc.shift}", desc.shift == 0),
    ], "koszul")


def is_cokoszul(desc: ModuleDescriptor) -> KoszulVerdict:
    spec = desc.sseq
    s1, s0, sm1 = s_value(spec, 1), s_value(spec, 0), s_value(spec, -1)
    thr = sign(mu(desc.n) * s1 - s0)
    special = sm1 == 0 and desc.speciality.is_special(-1)
    return _verdict([
        Condition("s_-1 <= 0, and F (x) K_-1^vee not F_p(n-1) if s_-1 = 0",
                  f"s_-1 = {sm1}" + (" (special at position -1)" if special else ""),
                  sm1 <= 0 and not special),
        Condition("s_0 > 0", f"s_0 = {s0}", s0 > 0),
        Condition("mu*s_1 - s_0 >= 0", f"mu*({s1}) - ({s0}) {_sgn_word(thr)}", thr >= 0),
        Condition("l = 0", f"l = {desc.shift}", desc.shift == 0),
    ], "cokoszul")


def koszul_charge_predicate(n: int, p: int, q: int) -> bool:
    """The Koszul conditions written directly in (p, q), generic speciality.

    p > 0, q > 0, np - q >= 0 and mu(pn - q(n-1)) + q <= 0.  The last one
    is mu*s_-1 - s_0 <= 0 with s_-1 = pn - q(n-1) and s_0 = -q.
    """
    if p <= 0 or q <= 0 or n * p - q < 0:
        return False
    return sign(mu(n) * (p * n - q * (n - 1)) + q) <= 0


def koszul_region(n: int, p_max: int, q_max: int) -> list[Charge]:
    check_normal_degree(n)
    out = []
    for p in range(1, p_max + 1):
        for q in range(1, min(q_max, n * p) + 1):
            if koszul_charge_predicate(n, p, q):
                out.append(Charge(p, q))
    return out


def is_maximally_generated(desc: ModuleDescriptor) -> bool:
    p, q = desc.charge
    return bool(is_koszul(desc)) and p * desc.n == q


@dataclass(frozen=True)
class UlrichData:
    multiplicity: int
    generators: int
    bound_holds: bool
    maximally_generated: bool
    note: str = ""


def ulrich_data(desc: ModuleDescriptor) -> UlrichData:
    if not is_koszul(desc):
        raise NotKoszul(f"{desc.as_dict()} is not Koszul")
    p, q = desc.charge
    e = p * desc.n
    gens = -s_value(desc.sseq, 0)
    note = ""
    if e == gens:
        note = "Gamma_*(F) model assumes det(F) is not O(p) (speciality at position 1 absent)"
    return UlrichData(e, gens, gens <= e, e == gens, note)
