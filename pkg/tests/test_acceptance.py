"""Acceptance criteria, one test per criterion.

Each test prints a single PASS/FAIL line; the lines are also collected and
repeated in the pytest terminal summary. Run this file directly for the same
report without pytest.
"""
import time

import pytest

from ellmcm import verify

# criterion -> wall-clock bound in seconds (None: no bound stated)
TIME_LIMITS = {1: 1.0, 2: 1.0, 4: 5.0, 7: 5.0}

REPORT = []


def _run(spec):
    t0 = time.perf_counter()
    try:
        ok, detail = spec.func()
    except Exception as exc:
        ok, detail = False, [f"{type(exc).__name__}: {exc}"]
    elapsed = time.perf_counter() - t0
    limit = TIME_LIMITS.get(spec.criterion)
    if limit is not None and elapsed >= limit:
        ok = False
        detail = list(detail) + [f"took {elapsed:.2f}s, limit {limit:.0f}s"]
    bound = f", limit {limit:.0f}s" if limit is not None else ""
    line = (f"criterion {spec.criterion:>2} [{'PASS' if ok else 'FAIL'}] {spec.title} "
            f"({elapsed:.2f}s{bound})")
    return ok, line, list(detail)


@pytest.mark.parametrize("spec", verify.CHECKS, ids=[f"c{c.criterion:02d}-{c.name}" for c in verify.CHECKS])
def test_criterion(spec):
    ok, line, detail = _run(spec)
    REPORT.append(line)
    print(line)
    for d in detail:
        print(f"    {d}")
    assert ok, "\n".join([line] + detail)


def test_every_criterion_has_a_check():
    assert [c.criterion for c in verify.CHECKS] == list(range(1, 12))


if __name__ == "__main__":
    failed = 0
    for spec in verify.CHECKS:
        ok, line, detail = _run(spec)
        print(line)
        for d in detail:
            print(f"    {d}")
        failed += not ok
    raise SystemExit(1 if failed else 0)
