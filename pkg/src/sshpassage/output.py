"""Result tables and their CSV / JSON / SVG serializations.

The CSV bytes are a pure function of the table contents (17 significant
digits, sorted rows are the producer's job); run metadata lives in a
JSON sidecar so reruns with identical configs produce byte-identical
CSV files. The SVG writers draw straight from a table and do no
computation of their own.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np


@dataclass(frozen=True)
class Column:
    name: str
    unit: str = ""
    role: str = "value"  # "coordinate" or "value"


@dataclass
class ResultTable:
    name: str
    columns: list[Column]
    rows: list[tuple]
    metadata: dict = field(default_factory=dict)

    def column_index(self, name: str) -> int:
        for k, col in enumerate(self.columns):
            if col.name == name:
                return k
        raise KeyError(name)

    def column_values(self, name: str) -> np.ndarray:
        k = self.column_index(name)
        return np.array([row[k] for row in self.rows], dtype=float)


def format_number(x) -> str:
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    return format(float(x), ".17g")


def write_csv(table: ResultTable, path: Path) -> None:
    lines = [",".join(col.name for col in table.columns)]
    for row in table.rows:
        lines.append(",".join(format_number(x) for x in row))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def write_metadata(table: ResultTable, path: Path) -> None:
    payload = {
        "table": table.name,
        "columns": [{"name": c.name, "unit": c.unit, "role": c.role}
                    for c in table.columns],
        "n_rows": len(table.rows),
        "timestamp": time.strftime("%Y-%m-%dT%H:%M:%S%z"),
        **table.metadata,
    }
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n",
                    encoding="utf-8")


def write_json(table: ResultTable, path: Path) -> None:
    payload = {
        "table": table.name,
        "columns": [c.name for c in table.columns],
        "rows": [[float(x) for x in row] for row in table.rows],
    }
    path.write_text(json.dumps(payload) + "\n", encoding="utf-8")


# --- minimal SVG plotting -------------------------------------------------

_W, _H = 640, 440
_ML, _MR, _MT, _MB = 70, 20, 30, 50
_COLORS = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e",
           "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"]


def _scale(v, lo, hi, out_lo, out_hi):
    if hi == lo:
        return 0.5 * (out_lo + out_hi)
    return out_lo + (v - lo) / (hi - lo) * (out_hi - out_lo)


def _axes(title: str, xlabel: str, ylabel: str,
          xlo, xhi, ylo, yhi) -> list[str]:
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_W}" height="{_H}" '
        f'font-family="sans-serif" font-size="12">',
        f'<rect width="{_W}" height="{_H}" fill="white"/>',
        f'<text x="{_W / 2}" y="18" text-anchor="middle" '
        f'font-size="14">{title}</text>',
        f'<rect x="{_ML}" y="{_MT}" width="{_W - _ML - _MR}" '
        f'height="{_H - _MT - _MB}" fill="none" stroke="black"/>',
        f'<text x="{_W / 2}" y="{_H - 12}" text-anchor="middle">'
        f'{xlabel}</text>',
        f'<text x="16" y="{_H / 2}" text-anchor="middle" '
        f'transform="rotate(-90 16 {_H / 2})">{ylabel}</text>',
    ]
    for frac in (0.0, 0.5, 1.0):
        xv = xlo + frac * (xhi - xlo)
        yv = ylo + frac * (yhi - ylo)
        xp = _scale(xv, xlo, xhi, _ML, _W - _MR)
        yp = _scale(yv, ylo, yhi, _H - _MB, _MT)
        parts.append(f'<text x="{xp:.1f}" y="{_H - _MB + 16}" '
                     f'text-anchor="middle">{xv:.4g}</text>')
        parts.append(f'<text x="{_ML - 6}" y="{yp + 4:.1f}" '
                     f'text-anchor="end">{yv:.4g}</text>')
    return parts


def write_line_svg(table: ResultTable, x: str, ys: list[str],
                   path: Path, title: str = "",
                   group_by: str | None = None) -> None:
    """Polyline plot of value columns against one coordinate column.

    With group_by, one polyline per (y, group value) pair.
    """
    xs = table.column_values(x)
    groups = [None]
    if group_by is not None:
        gv = table.column_values(group_by)
        groups = sorted(set(gv.tolist()))
    all_y = np.concatenate([table.column_values(y) for y in ys])
    xlo, xhi = float(np.min(xs)), float(np.max(xs))
    ylo, yhi = float(np.min(all_y)), float(np.max(all_y))
    if ylo == yhi:
        ylo, yhi = ylo - 0.5, yhi + 0.5
    pad = 0.05 * (yhi - ylo)
    ylo, yhi = ylo - pad, yhi + pad

    parts = _axes(title or table.name, x, ", ".join(ys), xlo, xhi, ylo, yhi)
    color = 0
    for y in ys:
        yv = table.column_values(y)
        for gval in groups:
            if gval is None:
                mask = np.ones(xs.size, dtype=bool)
                label = y
            else:
                mask = table.column_values(group_by) == gval
                label = f"{y} ({group_by}={gval:g})"
            pts = " ".join(
                f"{_scale(a, xlo, xhi, _ML, _W - _MR):.2f},"
                f"{_scale(b, ylo, yhi, _H - _MB, _MT):.2f}"
                for a, b in zip(xs[mask], yv[mask]))
            c = _COLORS[color % len(_COLORS)]
            parts.append(f'<polyline points="{pts}" fill="none" '
                         f'stroke="{c}" stroke-width="1.5"/>')
            parts.append(f'<text x="{_W - _MR - 6}" '
                         f'y="{_MT + 16 + 14 * color}" text-anchor="end" '
                         f'fill="{c}">{label}</text>')
            color += 1
    parts.append("</svg>")
    path.write_text("\n".join(parts) + "\n", encoding="utf-8")


def write_heatmap_svg(table: ResultTable, x: str, value_columns: list[str],
                      path: Path, title: str = "") -> None:
    """Heatmap with the coordinate column on x and one row per value column."""
    xs = table.column_values(x)
    z = np.array([table.column_values(c) for c in value_columns])
    zlo, zhi = float(np.min(z)), float(np.max(z))
    span = (zhi - zlo) or 1.0

    parts = _axes(title or table.name, x, "", float(np.min(xs)),
                  float(np.max(xs)), 0, len(value_columns))
    cw = (_W - _ML - _MR) / xs.size
    ch = (_H - _MT - _MB) / len(value_columns)
    for i, cname in enumerate(value_columns):
        yp = _H - _MB - (i + 1) * ch
        parts.append(f'<text x="{_ML - 6}" y="{yp + ch / 2 + 4:.1f}" '
                     f'text-anchor="end">{cname}</text>')
        for k in range(xs.size):
            v = (z[i, k] - zlo) / span
            # white -> blue ramp
            rg = int(round(255 * (1.0 - v)))
            parts.append(
                f'<rect x="{_ML + k * cw:.2f}" y="{yp:.2f}" '
                f'width="{cw + 0.5:.2f}" height="{ch:.2f}" '
                f'fill="rgb({rg},{rg},255)"/>')
    parts.append("</svg>")
    path.write_text("\n".join(parts) + "\n", encoding="utf-8")
