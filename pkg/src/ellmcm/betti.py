"""Stable Betti tables of MCM modules over the cone of an elliptic normal curve.

The module is Phi(F[l]) for a vector bundle F of charge (p, q).  Every
Betti number is a cohomology dimension of the twist F^vee (x) K_{-j}, whose
degree is s_{-j}; nonzero entries can only sit on the three lines

    U_l: i - j = l - 1,    D_l: i - j = l,    B_l: i - j = l + 1.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .charge import Charge, check_normal_degree
from .cohom import GENERIC, SpecialityOracle, cohomology_dims
from .errors import InvalidSpeciality
from .kbundle import NONPOSITIVE, POSITIVE, JumpReport, SSeqSpec, detect_jump, s_value
from .qfield import QuadNum, mu


@dataclass(frozen=True)
class ModuleDescriptor:
    n: int
    charge: Charge
    shift: int = 0
    speciality: SpecialityOracle = GENERIC

    def __post_init__(self):
        check_normal_degree(self.n)
        object.__setattr__(self, "charge", Charge(*self.charge))
        if not isinstance(self.speciality, SpecialityOracle):
            object.__setattr__(self, "speciality", SpecialityOracle(self.speciality))
        spec = self.sseq  # validates p > 0
        for j in self.speciality:
            if s_value(spec, j) != 0:
                raise InvalidSpeciality(
                    f"position {j} declared special but s_{j} = {s_value(spec, j)} != 0")

    @property
    def sseq(self) -> SSeqSpec:
        return SSeqSpec(self.n, self.charge.rank, self.charge.degree)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "p": self.charge.rank,
            "q": self.charge.degree,
            "l": self.shift,
            "speciality": sorted(self.speciality),
        }


def _line_name(kind: str, l: int) -> str:
    return f"{kind}{l}"


@dataclass
class BettiTable:
    """Sparse map (i, j) -> beta_{i,j} > 0 over a window of internal degrees j."""

    window: tuple[int, int]
    entries: dict[tuple[int, int], int] = field(default_factory=dict)
    descriptor: Optional[dict] = None

    def __post_init__(self):
        self.window = (int(self.window[0]), int(self.window[1]))
        for key, v in self.entries.items():
            if v <= 0:
                raise ValueError(f"stored Betti entries must be positive, got {key} -> {v}")

    def __getitem__(self, key: tuple[int, int]) -> int:
        return self.entries.get(key, 0)

    def __len__(self):
        return len(self.entries)

    def __eq__(self, other):
        if not isinstance(other, BettiTable):
            return NotImplemented
        return (self.window, self.entries, self.descriptor) == (
            other.window, other.entries, other.descriptor)

    @property
    def is_empty_window(self) -> bool:
        return self.window[0] > self.window[1]

    def column(self, i: int) -> dict[int, int]:
        return {j: v for (ii, j), v in sorted(self.entries.items()) if ii == i}

    def sorted_entries(self) -> list[tuple[int, int, int]]:
        return [(i, j, v) for (i, j), v in sorted(self.entries.items())]

    def to_json(self) -> dict:
        return {
            "descriptor": self.descriptor,
            "window": list(self.window),
            "entries": [list(t) for t in self.sorted_entries()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "BettiTable":
        entries = {(int(i), int(j)): int(v) for i, j, v in data["entries"]}
        return cls(tuple(data["window"]), entries, data.get("descriptor"))

    def grid(self, i_range: Optional[tuple[int, int]] = None) -> list[list[int]]:
        """Rows indexed by j - i, columns by i (the usual printed layout)."""
        if not self.entries:
            return []
        i_vals = [i for i, _ in self.entries]
        lo_i, hi_i = i_range or (min(i_vals), max(i_vals))
        rows = [j - i for i, j in self.entries]
        lo_r, hi_r = min(rows), max(rows)
        return [[self[(i, i + r)] for i in range(lo_i, hi_i + 1)] for r in range(lo_r, hi_r + 1)]

    def render_text(self, i_range: Optional[tuple[int, int]] = None) -> str:
        if not self.entries:
            return "(empty table)"
        i_vals = [i for i, _ in self.entries]
        lo_i, hi_i = i_range or (min(i_vals), max(i_vals))
        rows = sorted({j - i for i, j in self.entries})
        lo_r, hi_r = rows[0], rows[-1]
        cells = [[str(self[(i, i + r)]) if self[(i, i + r)] else "."
                  for i in range(lo_i, hi_i + 1)] for r in range(lo_r, hi_r + 1)]
        header = [str(i) for i in range(lo_i, hi_i + 1)]
        width = max(len(c) for row in cells + [header] for c in row)
        label_w = max(len(f"{r}:") for r in range(lo_r, hi_r + 1))
        lines = [" " * (label_w + 1) + " ".join(h.rjust(width) for h in header)]
        for r, row in zip(range(lo_r, hi_r + 1), cells):
            lines.append(f"{r}:".rjust(label_w) + " " + " ".join(c.rjust(width) for c in row))
        return "\n".join(lines)


def betti_entry(desc: ModuleDescriptor, i: int, j: int) -> int:
    l = desc.shift
    k = i - j
    if j >= 0:
        lines = {l - 1: "h0", l: "h1"}
    else:
        lines = {l: "h0", l + 1: "h1"}
    which = lines.get(k)
    if which is None:
        return 0
    deg = s_value(desc.sseq, -j)
    coh = cohomology_dims(deg, desc.speciality.is_special(-j))
    return coh.h0 if which == "h0" else coh.h1


def _entries_at(desc: ModuleDescriptor, j: int):
    l = desc.shift
    deg = s_value(desc.sseq, -j)
    coh = cohomology_dims(deg, desc.speciality.is_special(-j))
    i0, i1 = (j + l - 1, j + l) if j >= 0 else (j + l, j + l + 1)
    return (i0, coh.h0), (i1, coh.h1)


def betti_table(desc: ModuleDescriptor, window: tuple[int, int]) -> BettiTable:
    lo, hi = window
    entries = {}
    for j in range(lo, hi + 1):
        for i, v in _entries_at(desc, j):
            if v:
                entries[(i, j)] = v
    return BettiTable((lo, hi), entries, desc.as_dict())


@dataclass(frozen=True)
class GrowthClass:
    kind: str  # "linear" or "exponential"
    rate: QuadNum


def growth_class(n: int) -> GrowthClass:
    check_normal_degree(n)
    m = mu(n)
    return GrowthClass("linear" if n == 4 else "exponential", m)


@dataclass
class ShapeReport:
    tail_positive_i: str
    tail_negative_i: str
    jumps: dict[str, JumpReport]
    double_points: list[tuple[int, int, int]]
    half_line_violations: list[tuple[int, int, str]]
    growth: GrowthClass

    def summary_lines(self) -> list[str]:
        out = [
            f"tail i>0: {self.tail_positive_i}; tail i<0: {self.tail_negative_i}",
            f"growth: {self.growth.kind} (rate {self.growth.rate})",
        ]
        for side, rep in self.jumps.items():
            if not rep.exists:
                out.append(f"{side} side: no jump (chamber {rep.chamber})")
            elif rep.at_integer:
                out.append(f"{side} side: jump at s-index {rep.bracket} (s = 0, chamber {rep.chamber})")
            else:
                lo, hi = rep.bracket
                out.append(f"{side} side: jump between s-indices {lo} and {hi} (chamber {rep.chamber})")
        for i0, i1, j in self.double_points:
            out.append(f"double point at j={j}: beta_{{{i0},{j}}} = beta_{{{i1},{j}}} = 1")
        for i, j, line in self.half_line_violations:
            out.append(f"entry ({i},{j}) lies outside the half-line {line}")
        return out


def shape_report(desc: ModuleDescriptor) -> ShapeReport:
    """Which line carries each tail, where the jump happens, and special double points.

    Internal degree j >= 0 reads s_{-j} (the nonpositive side of the
    sequence): a positive value puts the entry on U_l, a negative one on D_l.
    Internal degree j < 0 reads the positive side: positive means D_l,
    negative means B_l.
    """
    l = desc.shift
    spec = desc.sseq
    jumps = {side: detect_jump(spec, side) for side in (POSITIVE, NONPOSITIVE)}
    up = _line_name("U", l) if jumps[NONPOSITIVE].tail_sign > 0 else _line_name("D", l)
    down = _line_name("D", l) if jumps[POSITIVE].tail_sign > 0 else _line_name("B", l)

    doubles = []
    for pos in sorted(desc.speciality):
        j = -pos
        (i0, v0), (i1, v1) = _entries_at(desc, j)
        if v0 == v1 == 1:
            doubles.append((i0, i1, j))

    violations = []
    # U_l only extends over i >= -1 and B_l over i <= 0
    for j in range(0, max(0, -l)):
        i = j + l - 1
        if i < -1 and betti_entry(desc, i, j):
            violations.append((i, j, _line_name("U", l)))
    for j in range(min(-1, -l), 0):
        i = j + l + 1
        if i > 0 and betti_entry(desc, i, j):
            violations.append((i, j, _line_name("B", l)))

    return ShapeReport(up, down, jumps, doubles, violations, growth_class(desc.n))
