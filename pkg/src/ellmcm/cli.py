"""Command-line front end.

Exit codes: 0 success, 1 domain or computation error, 2 usage error.
"""
from __future__ import annotations

import argparse
import re
import sys
from typing import Optional, Sequence

from . import render
from .betti import ModuleDescriptor, betti_table, shape_report
from .charge import check_degree
from .errors import EllMCMError
from .kbundle import k_charge
from .koszul import is_cokoszul, is_koszul, is_maximally_generated, koszul_region, ulrich_data
from .minell import PERIOD, MinellInput, betti_table_minell, generator_window, hilbert_series_minell, invariants_minell
from .series import hilbert_koszul_module, series_coeffs

_RANGE = re.compile(r"^(-?\d+)\.\.(-?\d+)$")
_RANGE_FLAGS = {"-j", "--j", "--window", "-w"}


class UsageError(Exception):
    pass


def parse_range(text: str) -> tuple[int, int]:
    m = _RANGE.match(text)
    if not m:
        raise argparse.ArgumentTypeError(f"expected LO..HI, got {text!r}")
    lo, hi = int(m.group(1)), int(m.group(2))
    if lo > hi:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo, hi


def _int_list(text: str) -> list[int]:
    if not text:
        return []
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _join_ranges(argv: Sequence[str]) -> list[str]:
    """Let '-j -2..3' through: argparse would read '-2..3' as an option."""
    out = []
    argv = list(argv)
    k = 0
    while k < len(argv):
        tok = argv[k]
        if tok in _RANGE_FLAGS and k + 1 < len(argv) and _RANGE.match(argv[k + 1]):
            out.append(f"{tok}={argv[k + 1]}")
            k += 2
            continue
        out.append(tok)
        k += 1
    return out


def _add_charge_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("-n", type=int, required=True, help="degree of the embedding (1, 2 or >= 4)")
    p.add_argument("-p", "-r", "--r", dest="p", type=int, help="rank")
    p.add_argument("-q", "-d", "--d", dest="q", type=int, help="degree")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ellmcm", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("kcharges", help="charges (r_j, d_j) of the bundles K_j")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-j", "--j", dest="j", type=parse_range, default=(-3, 3), help="range LO..HI")
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")

    p = sub.add_parser("betti", help="stable Betti table of Phi(F[l])")
    _add_charge_args(p)
    p.add_argument("-l", "--shift", type=int, default=0)
    p.add_argument("--special", type=_int_list, default=[],
                   help="positions j where F^vee (x) K_j is an Atiyah bundle (n >= 4)")
    p.add_argument("--atiyah", action="store_true", help="F is the Atiyah bundle F_r (n = 1, 2)")
    p.add_argument("-w", "--window", type=parse_range, default=None,
                   help="internal degrees j, LO..HI")
    p.add_argument("--format", choices=["text", "json", "svg"], default="text")

    p = sub.add_parser("koszul", help="Koszul / CoKoszul verdict with certificate")
    _add_charge_args(p)
    p.add_argument("-l", "--shift", type=int, default=0)
    p.add_argument("--special", type=_int_list, default=[])
    p.add_argument("--cokoszul", action="store_true")
    p.add_argument("--ulrich", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("region", help="integer Koszul charges in a box")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--max", dest="max", type=int, default=None, help="bound for both p and q")
    p.add_argument("--p-max", type=int, default=None)
    p.add_argument("--q-max", type=int, default=None)
    p.add_argument("--format", choices=["csv", "svg", "text", "json"], default="csv")

    p = sub.add_parser("series", help="Hilbert series and its expansion")
    _add_charge_args(p)
    p.add_argument("--atiyah", action="store_true")
    p.add_argument("-l", "--shift", type=int, default=0)
    p.add_argument("-N", type=int, default=10)
    p.add_argument("--format", choices=["text", "json"], default="text")

    p = sub.add_parser("verify", help="run the cross-check suite")
    p.add_argument("--only", type=lambda s: s.split(","), default=None,
                   help="comma-separated subset of checks")
    p.add_argument("--list", action="store_true")
    return parser


def _need_charge(args):
    if args.p is None or args.q is None:
        raise UsageError("rank and degree are required (-p/-q or -r/-d)")
    if args.p <= 0 and args.n >= 4:
        raise UsageError("rank must be positive")


def cmd_kcharges(args, out):
    lo, hi = args.j
    rows = [(j, k_charge(args.n, j)) for j in range(lo, hi + 1)]
    if args.format == "json":
        out.write(render.dumps({"n": args.n, "charges": render.charges_to_json(rows)}) + "\n")
    elif args.format == "csv":
        out.write("j,r,d\n" + "".join(f"{j},{z.rank},{z.degree}\n" for j, z in rows))
    else:
        width = max(len(str(x)) for j, z in rows for x in (j, z.rank, z.degree))
        out.write(f"{'j'.rjust(width)} {'r_j'.rjust(width)} {'d_j'.rjust(width)}\n")
        for j, z in rows:
            out.write(f"{str(j).rjust(width)} {str(z.rank).rjust(width)} {str(z.degree).rjust(width)}\n")


def _minell_input(args):
    z = (args.p, args.q)
    inp, k = MinellInput.reduce(args.n, z, atiyah=args.atiyah, shift=args.shift)
    notice = None
    if k:
        notice = f"notice: charge {z} reduced to {tuple(inp.charge)} by the shift action to power {k}"
    return inp, notice


def cmd_betti(args, out, err):
    _need_charge(args)
    if args.n in (1, 2):
        inp, notice = _minell_input(args)
        if notice:
            err.write(notice + "\n")
        per = PERIOD[inp.n]
        if args.window:
            table = betti_table_minell(inp, args.window)
        else:
            g_lo, g_hi = generator_window(inp.n, inp.shift)
            table = betti_table_minell(inp, (g_lo, g_hi + 5 * per), (0, 5))
        footer = [f"periodic: beta_(i+1,j) = beta_(i,j-{per})",
                  f"invariants: {invariants_minell(inp)}"]
    else:
        if args.atiyah:
            raise UsageError("--atiyah applies to n = 1, 2; use --special for n >= 4")
        desc = ModuleDescriptor(args.n, (args.p, args.q), args.shift, args.special)
        window = args.window or (-3, 6)
        table = betti_table(desc, window)
        footer = shape_report(desc).summary_lines()
    if args.format == "json":
        data = table.to_json()
        data["shape"] = footer
        out.write(render.dumps(data) + "\n")
    elif args.format == "svg":
        out.write(render.betti_svg(table))
    else:
        out.write(table.render_text() + "\n")
        for line in footer:
            out.write(f"# {line}\n")


def cmd_koszul(args, out):
    _need_charge(args)
    if args.n < 4:
        check_degree(args.n)
        raise UsageError("Koszul criteria apply to n >= 4")
    desc = ModuleDescriptor(args.n, (args.p, args.q), args.shift, args.special)
    verdict = is_cokoszul(desc) if args.cokoszul else is_koszul(desc)
    word = "COKOSZUL" if args.cokoszul else "KOSZUL"
    extra = {}
    if args.ulrich and not args.cokoszul and verdict:
        u = ulrich_data(desc)
        extra = {"multiplicity": u.multiplicity, "generators": u.generators,
                 "ulrich_bound": u.bound_holds, "maximally_generated": is_maximally_generated(desc)}
        if u.note:
            extra["note"] = u.note
    if args.format == "json":
        out.write(render.dumps({
            "descriptor": desc.as_dict(), "criterion": word.lower(), "verdict": verdict.verdict,
            "certificate": [{"condition": c.name, "value": c.value, "satisfied": c.satisfied}
                            for c in verdict.certificate],
            **extra}) + "\n")
        return
    out.write(f"{word if verdict else 'NOT ' + word}\n")
    for c in verdict.certificate:
        out.write(f"  {c.line()}\n")
    if extra:
        if extra["maximally_generated"]:
            out.write("  maximally generated\n")
        out.write(f"  e = {extra['multiplicity']}, mu = {extra['generators']}, "
                  f"Ulrich bound {'holds' if extra['ulrich_bound'] else 'fails'}\n")
        if "note" in extra:
            out.write(f"  note: {extra['note']}\n")


def cmd_region(args, out):
    check_degree(args.n)
    if args.n < 4:
        raise UsageError("the Koszul region is defined for n >= 4")
    p_max = args.p_max if args.p_max is not None else args.max
    q_max = args.q_max if args.q_max is not None else args.max
    if p_max is None:
        p_max = 20
    if q_max is None:
        q_max = args.n * p_max
    if p_max < 1 or q_max < 1:
        raise UsageError("bounds must be >= 1")
    pts = koszul_region(args.n, p_max, q_max)
    if args.format == "svg":
        out.write(render.region_svg(args.n, pts, p_max, q_max))
    elif args.format == "json":
        out.write(render.dumps({"n": args.n, "points": [list(z) for z in pts]}) + "\n")
    elif args.format == "text":
        out.write("".join(f"({p},{q})\n" for p, q in pts))
    else:
        out.write(render.region_csv(pts))


def cmd_series(args, out, err):
    _need_charge(args)
    shift = 0
    if args.n in (1, 2):
        inp, notice = _minell_input(args)
        if notice:
            err.write(notice + "\n")
        f, shift = hilbert_series_minell(inp)
    else:
        f = hilbert_koszul_module(args.n, (args.p, args.q))
    if args.format == "json":
        data = render.series_to_json(f, args.N)
        if shift:
            data["monomial_shift"] = shift
        out.write(render.dumps(data) + "\n")
        return
    prefix = f"t^{shift} * " if shift else ""
    out.write(f"H(t) = {prefix}{f}\n")
    out.write(f"numerator:   {list(f.numerator)}\n")
    out.write(f"denominator: {list(f.denominator)}\n")
    out.write(f"coefficients: {series_coeffs(f, args.N)}\n")


def cmd_verify(args, out):
    from . import verify

    if args.list:
        for c in verify.CHECKS:
            out.write(f"{c.name}: {c.title}\n")
        return 0
    try:
        results = verify.run(args.only)
    except ValueError as exc:
        raise UsageError(str(exc))
    for r in results:
        out.write(r.line() + "\n")
        if not r.ok:
            for d in r.detail:
                out.write(f"    {d}\n")
    failed = [r.spec.name for r in results if not r.ok]
    if failed:
        out.write(f"FAILED: {', '.join(failed)}\n")
        return 1
    out.write(f"all {len(results)} checks passed\n")
    return 0


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = _join_ranges(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "kcharges":
            cmd_kcharges(args, out)
        elif args.command == "betti":
            cmd_betti(args, out, err)
        elif args.command == "koszul":
            cmd_koszul(args, out)
        elif args.command == "region":
            cmd_region(args, out)
        elif args.command == "series":
            cmd_series(args, out, err)
        elif args.command == "verify":
            return cmd_verify(args, out)
    except UsageError as exc:
        err.write(f"usage error: {exc}\n")
        return 2
    except EllMCMError as exc:
        err.write(f"error: {exc}\n")
        return 1
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
