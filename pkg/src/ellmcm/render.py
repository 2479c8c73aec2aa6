"""Deterministic text, CSV, JSON and SVG renderings."""
from __future__ import annotations

import json
from fractions import Fraction
from html import escape

from .betti import BettiTable
from .charge import Charge
from .qfield import QuadNum, mu
from .series import RationalFunction, series_coeffs

SIZE = 480
MARGIN = 40


def _fmt(x) -> str:
    return f"{float(x):.3f}".rstrip("0").rstrip(".")


def charges_to_json(rows: list[tuple[int, Charge]]) -> list[dict]:
    return [{"j": j, "r": z.rank, "d": z.degree} for j, z in rows]


def charges_from_json(data: list[dict]) -> list[tuple[int, Charge]]:
    return [(int(row["j"]), Charge(int(row["r"]), int(row["d"]))) for row in data]


def series_to_json(f: RationalFunction, N: int) -> dict:
    out = f.to_json()
    out["coefficients"] = series_coeffs(f, N)
    return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True)


def region_csv(points) -> str:
    lines = ["p,q"] + [f"{p},{q}" for p, q in points]
    return "\n".join(lines) + "\n"


def koszul_boundary_slopes(n: int) -> tuple[Fraction, QuadNum]:
    """Slopes q/p of the lines q = np and mu(pn - q(n-1)) + q = 0."""
    m = mu(n)
    return Fraction(n), (m * n) / (m * (n - 1) - 1)


def _clip_ray(slope, p_max: int, q_max: int):
    """End point of q = slope * p inside [0, p_max] x [0, q_max], computed exactly."""
    q_end = slope * p_max
    if q_end <= q_max:
        return Fraction(p_max), q_end
    return q_max / slope if isinstance(slope, QuadNum) else Fraction(q_max) / slope, Fraction(q_max)


def region_svg(n: int, points, p_max: int, q_max: int) -> str:
    span = SIZE - 2 * MARGIN
    sx = lambda p: MARGIN + span * float(p) / p_max
    sy = lambda q: SIZE - MARGIN - span * float(q) / q_max
    upper, lower = koszul_boundary_slopes(n)
    up_end = _clip_ray(upper, p_max, q_max)
    lo_end = _clip_ray(lower, p_max, q_max)
    corner = ""
    if up_end[1] == q_max and lo_end[0] == p_max and lo_end[1] < q_max:
        corner = f" {_fmt(sx(p_max))},{_fmt(sy(q_max))}"
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {SIZE} {SIZE}" '
        f'width="{SIZE}" height="{SIZE}">',
        f'<title>Koszul charges, n={n}</title>',
        f'<rect x="0" y="0" width="{SIZE}" height="{SIZE}" fill="white"/>',
        f'<polygon class="koszul-wedge" fill="#bbbbbb" points="{_fmt(sx(0))},{_fmt(sy(0))} '
        f'{_fmt(sx(up_end[0]))},{_fmt(sy(up_end[1]))}{corner} '
        f'{_fmt(sx(lo_end[0]))},{_fmt(sy(lo_end[1]))}"/>',
        f'<path class="axis" stroke="black" d="M{_fmt(sx(0))} {_fmt(sy(0))} H{_fmt(sx(p_max))}"/>',
        f'<path class="axis" stroke="black" d="M{_fmt(sx(0))} {_fmt(sy(0))} V{_fmt(sy(q_max))}"/>',
        f'<path class="boundary" id="line-np" stroke="#333333" stroke-width="1.5" '
        f'd="M{_fmt(sx(0))} {_fmt(sy(0))} L{_fmt(sx(up_end[0]))} {_fmt(sy(up_end[1]))}"/>',
        f'<path class="boundary" id="line-mu" stroke="#333333" stroke-width="1.5" '
        f'd="M{_fmt(sx(0))} {_fmt(sy(0))} L{_fmt(sx(lo_end[0]))} {_fmt(sy(lo_end[1]))}"/>',
        f'<text x="{SIZE // 2}" y="{SIZE - 8}" text-anchor="middle" font-size="12">p (rank)</text>',
        f'<text x="12" y="{SIZE // 2}" font-size="12" transform="rotate(-90 12 {SIZE // 2})" '
        f'text-anchor="middle">q (degree)</text>',
    ]
    for p, q in points:
        out.append(f'<circle class="charge" cx="{_fmt(sx(p))}" cy="{_fmt(sy(q))}" r="2" fill="black">'
                   f'<title>({p},{q})</title></circle>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def betti_svg(table: BettiTable, title: str = "Betti table") -> str:
    grid = table.grid()
    if not grid:
        return ('<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 120 40" width="120" height="40">'
                '<text x="4" y="24" font-size="12">empty</text></svg>\n')
    i_vals = [i for i, _ in table.entries]
    rows_r = [j - i for i, j in table.entries]
    lo_i, lo_r = min(i_vals), min(rows_r)
    cell = 36
    w = cell * (len(grid[0]) + 1)
    h = cell * (len(grid) + 1)
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}">',
           f"<title>{escape(title)}</title>"]
    for c in range(len(grid[0])):
        out.append(f'<text x="{cell * (c + 1) + cell // 2}" y="{cell // 2 + 4}" text-anchor="middle" '
                   f'font-size="11">{lo_i + c}</text>')
    for r, row in enumerate(grid):
        y = cell * (r + 1)
        out.append(f'<text x="{cell // 2}" y="{y + cell // 2 + 4}" text-anchor="middle" '
                   f'font-size="11">{lo_r + r}:</text>')
        for c, v in enumerate(row):
            x = cell * (c + 1)
            fill = "#dddddd" if v else "white"
            out.append(f'<rect x="{x}" y="{y}" width="{cell}" height="{cell}" fill="{fill}" stroke="#999999"/>')
            if v:
                out.append(f'<text x="{x + cell // 2}" y="{y + cell // 2 + 4}" text-anchor="middle" '
                           f'font-size="11">{v}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
