"""Cross-check suite: golden tables, oracle equivalences and structural laws.

Each check returns ``(ok, detail)``.  ``run`` executes a selection and times
it; the CLI ``verify`` command and the acceptance tests both go through here.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from . import oracle
from .betti import ModuleDescriptor, betti_entry, betti_table
from .errors import EllMCMError
from .kbundle import SIDES, SSeqSpec, detect_jump, k_charge, s_value
from .koszul import is_koszul
from .minell import (ORDER, PERIOD, MinellInput, betti_table_minell, fundamental_domain_reduce,
                     invariants_minell, orbit)
from .qfield import QuadNum, mu, sign
from .series import hilbert_R, hilbert_koszul_module, poincare_koszul, series_coeffs

SEED = 20161018

# Printed tables, rows indexed by j - i, columns i = 0, 1.
E8_COLUMNS = {
    "atiyah": lambda r, d: {0: [1, r, r, 1, 0, 0], 1: [0, 0, 1, r, r, 1]},
    "generic": lambda r, d: {0: [0, r, r - d, d, 0, 0], 1: [0, 0, 0, r, r - d, d]},
}
E8_POINTS = [(1, 0), (2, 0), (3, 1), (5, 2)]
# (e(M), mu(M), rk(M))
INVARIANTS = {
    "atiyah": lambda r: (2 * (r + 1), 2 * (r + 1), r + 1),
    "generic": lambda r: (2 * r, 2 * r, r),
}
E7_COLUMNS = {
    "atiyah": lambda r, d: {0: [1, 2 * r, 1, 0], 1: [0, 1, 2 * r, 1]},
    "generic": lambda r, d: {0: [0, 2 * r - d, d, 0], 1: [0, 0, 2 * r - d, d]},
}
E7_POINTS = [(1, 0), (1, 1), (2, 3)]


def _printed_columns(table, n_rows):
    return {i: [table[(i, i + row)] for row in range(n_rows)] for i in (0, 1)}


def _golden_cases():
    for name, golden, n, points, n_rows in (("n=1 table", E8_COLUMNS, 1, E8_POINTS, 6),
                                            ("n=2 table", E7_COLUMNS, 2, E7_POINTS, 4)):
        for r, d in points:
            yield name, n, "generic", r, d, golden["generic"](r, d), n_rows
            yield name, n, "atiyah", r, 0, golden["atiyah"](r, 0), n_rows


def check_tables():
    failures = []
    count = 0
    for name, n, case, r, d, expected, n_rows in _golden_cases():
        inp = MinellInput(n, (r, d), atiyah=(case == "atiyah"))
        got = _printed_columns(betti_table_minell(inp, (-2, n_rows + 2)), n_rows)
        count += 1
        if got != expected:
            failures.append(f"{name} {case} (r,d)=({r},{d}): {got} != {expected}")
        inv = invariants_minell(inp)
        if (inv.multiplicity, inv.generators, inv.rank) != INVARIANTS[case](r):
            failures.append(f"invariants {case} n={n} r={r}: {inv}")
    return not failures, failures or [f"{count} golden columns and their invariants match"]


def check_recursion():
    bad = [(n, j) for n in range(4, 9) for j in range(-50, 51)
           if k_charge(n, j) != oracle.charge_by_matrix_power(n, j)]
    return not bad, bad[:10] or ["k_charge == matrix power for n=4..8, |j|<=50"]


def check_identities():
    bad = []
    for n in range(4, 9):
        for j in range(1, 51):
            if k_charge(n, j).degree != k_charge(n, -j).degree:
                bad.append(("deg", n, j))
            if k_charge(n, j + 1).rank != k_charge(n, -j).rank:
                bad.append(("rk", n, j))
    return not bad, bad[:10] or ["deg K_j = deg K_-j and rk K_j+1 = rk K_-j, 1<=j<=50"]


def koszul_sweep(ns=(4, 5, 6), p_max=15, q_max=75):
    for n in ns:
        for p in range(1, p_max + 1):
            for q in range(1, q_max + 1):
                desc = ModuleDescriptor(n, (p, q))
                if is_koszul(desc):
                    yield desc


def check_master():
    bad, count = [], 0
    for desc in koszul_sweep():
        n, z = desc.n, desc.charge
        count += 1
        if poincare_koszul(n, z).substitute_neg() * hilbert_R(n) != hilbert_koszul_module(n, z):
            bad.append((n, tuple(z)))
    return not bad and count > 0, bad[:10] or [f"S(-t) H_R = H_M for {count} Koszul charges"]


def check_diagonal():
    bad, count = [], 0
    for desc in koszul_sweep():
        coeffs = series_coeffs(poincare_koszul(desc.n, desc.charge), 25)
        spec = desc.sseq
        for i in range(26):
            if not coeffs[i] == betti_entry(desc, i, i) == -s_value(spec, -i):
                bad.append((desc.n, tuple(desc.charge), i))
                break
        count += 1
    return not bad and count > 0, bad[:10] or [f"diagonal law holds for {count} charges, i<=25"]


def check_closure():
    bad, count = [], 0
    for desc in koszul_sweep():
        table = betti_table(desc, (-1, 27))
        for (i, j), v in table.entries.items():
            if 0 <= i <= 25 and i != j:
                bad.append((desc.n, tuple(desc.charge), i, j, v))
        for i in range(26):
            if table[(i, i)] <= 0:
                bad.append((desc.n, tuple(desc.charge), i, i, 0))
        count += 1
    return not bad and count > 0, bad[:10] or [f"off-diagonal vanishing for {count} Koszul charges"]


def random_specs(count=1000, seed=SEED, bound=50):
    rng = random.Random(seed)
    for _ in range(count):
        yield SSeqSpec(rng.randint(4, 8), rng.randint(1, bound), rng.randint(-bound, bound))


def check_jumps(count=1000, budget=200):
    bad = []
    for spec in random_specs(count):
        for side in SIDES:
            changes = oracle.count_sign_changes(oracle.naive_terms(spec, side, budget))
            exact = detect_jump(spec, side)
            naive = oracle.naive_jump_scan(spec, side, budget)
            if changes > 1 or not exact.same_jump(naive) or exact.tail_sign != naive.tail_sign:
                bad.append((spec, side, changes, exact, naive))
    return not bad, [str(b) for b in bad[:5]] or [f"{count} charges x 2 sides: <=1 change, detectors agree"]


def _diagonal(n, z, upto):
    desc = ModuleDescriptor(n, z)
    return [betti_entry(desc, i, i) for i in range(upto + 1)]


def check_growth():
    bad = []
    for desc in koszul_sweep(ns=(4,), p_max=4, q_max=16):
        b = _diagonal(4, desc.charge, 40)
        # eventually linear: from i = 2 on
        if any(b[i + 1] - 2 * b[i] + b[i - 1] for i in range(2, 40)):
            bad.append(("n=4 not linear", tuple(desc.charge)))
    target = float(mu(5))
    for desc in koszul_sweep(ns=(5,), p_max=4, q_max=20):
        b = _diagonal(5, desc.charge, 41)
        if any(b[i + 1] != 3 * b[i] - b[i - 1] for i in range(1, 41)):
            bad.append(("n=5 recursion", tuple(desc.charge)))
        if abs(b[40] / b[39] - target) >= 1e-6:
            bad.append(("n=5 ratio", tuple(desc.charge), b[40] / b[39]))
    return not bad, bad[:10] or ["n=4 diagonals linear; n=5 diagonals satisfy b' = 3b - b'' with ratio -> mu"]


def _minell_inputs(r_max):
    for n in (1, 2):
        for r in range(1, r_max + 1):
            for d in range(0, n * r):
                yield MinellInput(n, (r, d))
            yield MinellInput(n, (r, 0), atiyah=True)


def check_minell():
    bad = []
    for n in (1, 2):
        for r in range(-20, 21):
            for d in range(-20, 21):
                if (r, d) == (0, 0):
                    continue
                size = len(orbit(n, (r, d)))
                if ORDER[n] % size:
                    bad.append(("orbit size", n, r, d, size))
                try:
                    w, _ = fundamental_domain_reduce(n, (r, d))
                except EllMCMError as exc:
                    bad.append(("reduce", n, r, d, str(exc)))
                    continue
                if fundamental_domain_reduce(n, w) != (w, 0):
                    bad.append(("idempotent", n, r, d))
    for inp in _minell_inputs(5):
        for l in (-1, 0, 1):
            shifted = MinellInput(inp.n, inp.charge, inp.atiyah, l)
            per = PERIOD[inp.n]
            table = betti_table_minell(shifted, (-per - 3, 12 + 3 * per))
            for i in range(10):
                for j in range(12):
                    if table[(i + 1, j)] != table[(i, j - per)]:
                        bad.append(("periodicity", shifted, i, j))
    return not bad, bad[:10] or ["orbits, unique idempotent reduction and periodicity verified"]


def check_generation():
    bad = []
    for inp in _minell_inputs(10):
        inv = invariants_minell(inp)
        if not inv.generators == inv.multiplicity == 2 * inv.rank:
            bad.append((inp, inv))
    return not bad, bad[:10] or ["generators = multiplicity = 2 rank for all domain charges r<=10"]


def _interval_sign(x: QuadNum, prec=200):
    from mpmath import iv

    old = iv.prec
    iv.prec = prec
    try:
        val = (iv.mpf(x.a.numerator) / x.a.denominator
               + iv.mpf(x.b.numerator) / x.b.denominator * iv.sqrt(iv.mpf(x.D)))
        if val.a > 0:
            return 1
        if val.b < 0:
            return -1
        return None
    finally:
        iv.prec = old


def random_quadnums(count=10_000, seed=SEED):
    rng = random.Random(seed)
    for k in range(count):
        D = rng.choice([n * n - 4 * n for n in range(4, 13)] + [rng.randint(0, 500)])
        b = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**3))
        mode = k % 3
        if mode == 0:
            a = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**3))
        else:
            # a close to -b sqrt(D): heavy cancellation
            scale = 10 ** rng.randint(3, 25)
            root = isqrt(int(b * b * D * scale * scale))
            s = -1 if b > 0 else 1
            a = Fraction(s * (root + rng.randint(-2, 2)), scale)
        yield QuadNum(a, b, D)


def check_qfield(count=10_000):
    bad = []
    for x in random_quadnums(count):
        exact = sign(x)
        approx = _interval_sign(x)
        if approx is None:
            if exact != 0:
                bad.append(("inconclusive", x, exact))
        elif approx != exact:
            bad.append(("mismatch", x, exact, approx))
    for n in range(4, 13):
        m = mu(n)
        if m * m - (n - 2) * m + 1 != 0:
            bad.append(("mu", n))
    return not bad, [str(b) for b in bad[:5]] or [f"{count} signs agree with 200-bit intervals; mu roots exact"]


@dataclass(frozen=True)
class CheckSpec:
    criterion: int
    name: str
    title: str
    func: object


CHECKS = [
    CheckSpec(1, "tables", "golden Betti tables and invariants, n = 1, 2", check_tables),
    CheckSpec(2, "recursion", "recursion equals matrix power", check_recursion),
    CheckSpec(3, "identities", "K_j degree/rank identities", check_identities),
    CheckSpec(4, "master", "Koszul master identity", check_master),
    CheckSpec(5, "diagonal", "diagonal law", check_diagonal),
    CheckSpec(6, "closure", "Koszul definition closure", check_closure),
    CheckSpec(7, "jumps", "jump uniqueness and detector equivalence", check_jumps),
    CheckSpec(8, "growth", "linear/exponential growth", check_growth),
    CheckSpec(9, "minell", "minimal elliptic structure", check_minell),
    CheckSpec(10, "generation", "maximal generation", check_generation),
    CheckSpec(11, "qfield", "quadratic field soundness", check_qfield),
]


@dataclass
class CheckResult:
    spec: CheckSpec
    ok: bool
    detail: list
    seconds: float

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"[{status}] {self.spec.criterion:>2} {self.spec.name}: {self.spec.title} ({self.seconds:.2f}s)"


def run(only=None) -> list[CheckResult]:
    selected = [c for c in CHECKS if not only or c.name in only]
    unknown = set(only or ()) - {c.name for c in CHECKS}
    if unknown:
        raise ValueError(f"unknown checks: {sorted(unknown)}")
    results = []
    for c in selected:
        t0 = time.perf_counter()
        try:
            ok, detail = c.func()
        except Exception as exc:  # a crashing check is a failing check
            ok, detail = False, [f"{type(exc).__name__}: {exc}"]
        results.append(CheckResult(c, ok, list(detail), time.perf_counter() - t0))
    return results
