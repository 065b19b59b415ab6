"""Grid text format, JSON report schema and the SVG figure renderer.

The grid format is a one-line header ``lattice-grid v1 W H OX OY`` followed
by H rows of W characters, ``#`` occupied and ``.`` vacant, row 0 on top.
Text cell ``(c, r)`` maps to the square ``(c - OX, (H-1-r) - OY)``.
"""

from __future__ import annotations

import json
from typing import Optional

from .cycles import Cycle
from .duality import DualityReport
from .lattice import GridConfig, Square

HEADER_TAG = "lattice-grid"
HEADER_VERSION = "v1"
REPORT_FORMAT = "report v1"
SVG_SCALE = 20  # user units per square


class GridParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{message} (line {line}, column {column})")
        self.line = line
        self.column = column


def parse_grid(text: str) -> GridConfig:
    lines = text.splitlines()
    if not lines:
        raise GridParseError("bad header: empty input", 1, 1)
    parts = lines[0].split()
    if len(parts) != 6 or parts[0] != HEADER_TAG or parts[1] != HEADER_VERSION:
        raise GridParseError("bad header", 1, 1)
    try:
        w, h, ox, oy = (int(p) for p in parts[2:])
    except ValueError:
        raise GridParseError("bad header: non-integer field", 1, 1) from None
    if w < 1 or h < 1:
        raise GridParseError("bad header: empty grid", 1, 1)
    if not (0 <= ox < w and 0 <= oy < h):
        raise GridParseError("bad header: origin outside grid", 1, 1)
    rows = lines[1:]
    if len(rows) != h:
        raise GridParseError(f"expected {h} rows, found {len(rows)}", len(lines) + 1, 1)
    occupied = set()
    for r, row in enumerate(rows):
        if len(row) != w:
            raise GridParseError(f"ragged row: expected {w} characters", r + 2, len(row) + 1)
        for c, ch in enumerate(row):
            if ch == "#":
                occupied.add((c - ox, (h - 1 - r) - oy))
            elif ch != ".":
                raise GridParseError(f"illegal character {ch!r}", r + 2, c + 1)
    if (0, 0) not in occupied:
        raise GridParseError("origin must be occupied", h - oy + 1, ox + 1)
    window = (-ox, -oy, w - 1 - ox, h - 1 - oy)
    return GridConfig(window, frozenset(occupied))


def emit_grid(grid: GridConfig) -> str:
    x0, y0, x1, y1 = grid.window
    w, h = x1 - x0 + 1, y1 - y0 + 1
    ox, oy = -x0, -y0
    rows = []
    for r in range(h):
        y = (h - 1 - r) - oy
        rows.append(
            "".join("#" if (c - ox, y) in grid.occupied else "." for c in range(w))
        )
    return f"{HEADER_TAG} {HEADER_VERSION} {w} {h} {ox} {oy}\n" + "\n".join(rows) + "\n"


def _corner_walk(c: Cycle) -> list[list[int]]:
    return [list(p) for p in c.corners_closed()]


def _squares(sqs) -> list[list[int]]:
    return [list(s) for s in sorted(sqs)]


def report_json(report: DualityReport, timing_ms: float = 0.0) -> str:
    """Deterministic JSON for a duality report (byte-identical per report)."""
    doc = {
        "format": REPORT_FORMAT,
        "component": _squares(report.component.squares),
        "outer": _corner_walk(report.outer),
        "lambda_all": _squares(report.lambdas.lambda_all),
        "lambda_exterior": _squares(report.lambdas.lambda_exterior),
        "d_fin": _corner_walk(report.d_fin),
        "h_out": [list(s) for s in report.h_out.canonical()],
        "q": len(report.h_out),
        "checks": {
            name: {"ok": v.ok, "detail": v.detail if not v.ok else ""}
            for name, v in sorted(report.checks.items())
        },
        "timing_ms": timing_ms,
    }
    return json.dumps(doc, sort_keys=True, separators=(",", ":")) + "\n"


def _svg_point(u: int, v: int, x0: int, y1: int) -> tuple[int, int]:
    return ((u - 2 * x0 + 1) * (SVG_SCALE // 2), (2 * y1 + 1 - v) * (SVG_SCALE // 2))


def render_svg(grid: GridConfig, report: Optional[DualityReport] = None) -> str:
    """Figure-style rendering: occupied squares dark grey, fringe squares
    dotted, the component boundary solid, the fence boundary bold."""
    x0, y0, x1, y1 = grid.window
    w = (x1 - x0 + 1) * SVG_SCALE
    h = (y1 - y0 + 1) * SVG_SCALE
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f'<rect x="0" y="0" width="{w}" height="{h}" fill="white"/>',
    ]

    def rect(s: Square, style: str) -> str:
        rx = (s[0] - x0) * SVG_SCALE
        ry = (y1 - s[1]) * SVG_SCALE
        return f'<rect x="{rx}" y="{ry}" width="{SVG_SCALE}" height="{SVG_SCALE}" {style}/>'

    for s in sorted(grid.occupied):
        out.append(rect(s, 'fill="#444444"'))
    if report is not None:
        for s in sorted(report.lambdas.lambda_exterior):
            out.append(rect(s, 'fill="none" stroke="#444444" stroke-width="1" stroke-dasharray="3 3"'))

        def poly(c: Cycle, style: str) -> str:
            pts = " ".join(
                f"{px},{py}"
                for px, py in (_svg_point(u, v, x0, y1) for u, v in c.corners_closed())
            )
            return f'<polyline points="{pts}" fill="none" {style}/>'

        out.append(poly(report.outer, 'stroke="black" stroke-width="1.5"'))
        out.append(poly(report.d_fin, 'stroke="black" stroke-width="3"'))
    out.append("</svg>")
    return "\n".join(out) + "\n"
