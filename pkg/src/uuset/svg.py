"""Schematic SVG strips of the constructions: one strip per row.

Coordinates are computed as fractions and rounded to four decimals by
integer arithmetic, so output is byte-stable across platforms.
"""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from . import real, unit
from .intervals import Interval, IntervalSet

WIDTH = 800
MARGIN = 60
STRIP = 24
BAR = 8
NOTCH = 3


def _num(x: Fraction | int) -> str:
    scaled = round(Fraction(x) * 10_000)
    sign = "-" if scaled < 0 else ""
    whole, frac = divmod(abs(scaled), 10_000)
    return f"{sign}{whole}.{frac:04d}".rstrip("0").rstrip(".") if frac else f"{sign}{whole}"


def _x(p: Fraction, ambient: Interval) -> Fraction:
    return MARGIN + (p - ambient.lo) / ambient.width * WIDTH


def _strip(row: IntervalSet, y: int, ambient: Interval) -> list[str]:
    out = []
    for iv in row:
        x0, x1 = _x(iv.lo, ambient), _x(iv.hi, ambient)
        if iv.is_point:
            out.append(f'<circle cx="{_num(x0)}" cy="{y}" r="{NOTCH}" class="pt"/>')
            continue
        out.append(
            f'<rect x="{_num(x0)}" y="{y - BAR // 2}" width="{_num(x1 - x0)}" height="{BAR}" class="seg"/>'
        )
        for end, closed in ((x0, iv.lo_closed), (x1, iv.hi_closed)):
            if not closed:
                out.append(f'<circle cx="{_num(end)}" cy="{y}" r="{NOTCH}" class="open"/>')
    return out


def render_svg(rows: list[IntervalSet], patches: list[tuple[Fraction, int]], ambient: Interval, title: str) -> str:
    height = STRIP * (len(rows) + 2)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH + 2 * MARGIN}" height="{height}" '
        f'viewBox="0 0 {WIDTH + 2 * MARGIN} {height}">',
        "<style>.seg{fill:#335}.open{fill:#fff;stroke:#335;stroke-width:1.5}"
        ".pt{fill:#335}.patch{fill:#c22}.axis{stroke:#aaa}text{font:11px monospace}</style>",
        f'<text x="{MARGIN}" y="14">{escape(title)}</text>',
    ]
    for n, row in enumerate(rows):
        # row 0 at the bottom
        y = STRIP * (len(rows) - n)
        lines.append(f'<line x1="{MARGIN}" y1="{y}" x2="{MARGIN + WIDTH}" y2="{y}" class="axis"/>')
        lines.append(f'<text x="4" y="{y + 4}">{n}</text>')
        lines.extend(_strip(row, y, ambient))
    for p, r in patches:
        if r < len(rows):
            y = STRIP * (len(rows) - r)
            lines.append(f'<circle cx="{_num(_x(p, ambient))}" cy="{y}" r="{NOTCH + 1}" class="patch"/>')
    base = STRIP * (len(rows) + 1)
    for p in (ambient.lo, (ambient.lo + ambient.hi) / 2, ambient.hi):
        lines.append(f'<text x="{_num(_x(p, ambient) - 8)}" y="{base}">{p}</text>')
    lines.append("</svg>")
    return "\n".join(lines) + "\n"


def render(space: str, depth: int, stage: int, copy_stage: int = 0) -> str:
    if space == "unit":
        rows = [unit.row_formula(n) for n in range(depth)]
        patches = [(ev.point, ev.row) for ev in unit.unit_schedule(stage)]
        return render_svg(rows, patches, unit.UNIT, f"W rows 0..{depth - 1}, {stage} patch events")
    if space == "real":
        rows = [real.a_row(r, copy_stage) for r in range(depth)]
        patches = [(ev.point, ev.row) for ev in real.real_schedule(stage)]
        return render_svg(
            rows, patches, Interval.closed(-1, 1), f"A rows 0..{depth - 1} on (-1,1), {stage} patch steps"
        )
    raise ValueError(f"unknown space {space!r}")
