"""Dependency-free SVG line charts.

Output is a pure function of the input data: coordinates are written with a
fixed number of decimals so identical inputs give identical bytes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

PANEL_W = 800
PANEL_H = 600
MARGIN_L, MARGIN_R, MARGIN_T, MARGIN_B = 90, 170, 60, 70

COLORS = ["#000000", "#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd"]
DASHES = ["", "2,4", "8,4,2,4", "6,3", "1,3", "10,2"]


@dataclass
class Series:
    label: str
    x: Sequence[float]
    y: Sequence[float]
    key: str = ""  # emitted as data-key for downstream parsing


@dataclass
class Panel:
    title: str
    x_label: str
    y_label: str
    series: list[Series] = field(default_factory=list)
    name: str = ""
    vline: Optional[float] = None
    vline_label: str = ""


def _esc(text: str) -> str:
    return (
        text.replace("&", "&amp;")
        .replace("<", "&lt;")
        .replace(">", "&gt;")
        .replace('"', "&quot;")
    )


def nice_ticks(lo: float, hi: float, target: int = 6) -> list[float]:
    """Round tick values (1, 2, 2.5 or 5 x 10^k steps) covering [lo, hi]."""
    if hi < lo:
        lo, hi = hi, lo
    if hi == lo:
        span = abs(lo) or 1.0
        lo, hi = lo - 0.5 * span, hi + 0.5 * span
    raw = (hi - lo) / max(target - 1, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    for m in (1.0, 2.0, 2.5, 5.0, 10.0):
        step = m * mag
        if step >= raw:
            break
    k0 = math.floor(lo / step)
    k1 = math.ceil(hi / step)
    # integer multiples of the step keep tick labels free of drift
    return [k * step + 0.0 for k in range(k0, k1 + 1)]


def _fmt_tick(v: float) -> str:
    s = f"{v:.6g}"
    return "0" if s == "-0" else s


def _render_panel(panel: Panel, y_offset: int) -> list[str]:
    left, right = MARGIN_L, PANEL_W - MARGIN_R
    top, bottom = MARGIN_T, PANEL_H - MARGIN_B

    xs = [float(v) for s in panel.series for v in s.x]
    ys = [float(v) for s in panel.series for v in s.y]
    if not xs:
        raise ValueError(f"panel {panel.title!r} has no data")
    if panel.vline is not None:
        xs.append(panel.vline)
    xt = nice_ticks(min(xs), max(xs))
    yt = nice_ticks(min(ys), max(ys))
    x0, x1 = xt[0], xt[-1]
    y0, y1 = yt[0], yt[-1]

    def px(x: float) -> float:
        return left + (x - x0) / (x1 - x0) * (right - left)

    def py(y: float) -> float:
        return bottom - (y - y0) / (y1 - y0) * (bottom - top)

    name = f' data-panel="{_esc(panel.name)}"' if panel.name else ""
    out = [f'<g transform="translate(0,{y_offset})"{name}>']
    out.append(
        f'<text x="{(left + right) / 2:.1f}" y="32" text-anchor="middle" '
        f'font-size="20" font-family="sans-serif">{_esc(panel.title)}</text>'
    )
    for v in yt:
        y = py(v)
        out.append(
            f'<line x1="{left}" y1="{y:.2f}" x2="{right}" y2="{y:.2f}" stroke="#e0e0e0" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{left - 8}" y="{y + 4:.2f}" text-anchor="end" font-size="12" '
            f'font-family="sans-serif">{_fmt_tick(v)}</text>'
        )
    for v in xt:
        x = px(v)
        out.append(
            f'<line x1="{x:.2f}" y1="{bottom}" x2="{x:.2f}" y2="{bottom + 6}" stroke="#000000" stroke-width="1"/>'
        )
        out.append(
            f'<text x="{x:.2f}" y="{bottom + 22}" text-anchor="middle" font-size="12" '
            f'font-family="sans-serif">{_fmt_tick(v)}</text>'
        )
    out.append(
        f'<line x1="{left}" y1="{bottom}" x2="{right}" y2="{bottom}" stroke="#000000" stroke-width="1.5"/>'
    )
    out.append(
        f'<line x1="{left}" y1="{top}" x2="{left}" y2="{bottom}" stroke="#000000" stroke-width="1.5"/>'
    )
    if y0 < 0 < y1:
        out.append(
            f'<line x1="{left}" y1="{py(0.0):.2f}" x2="{right}" y2="{py(0.0):.2f}" '
            f'stroke="#888888" stroke-width="1"/>'
        )

    for i, s in enumerate(panel.series):
        color = COLORS[i % len(COLORS)]
        dash = DASHES[i % len(DASHES)]
        dash_attr = f' stroke-dasharray="{dash}"' if dash else ""
        key = f' data-key="{_esc(s.key)}"' if s.key else ""
        pts = " ".join(f"{px(float(a)):.2f},{py(float(b)):.2f}" for a, b in zip(s.x, s.y))
        out.append(
            f'<polyline fill="none" stroke="{color}" stroke-width="2"{dash_attr}{key} points="{pts}"/>'
        )
        ly = top + 14 + 24 * i
        out.append(
            f'<line x1="{right + 14}" y1="{ly}" x2="{right + 44}" y2="{ly}" stroke="{color}" '
            f'stroke-width="2"{dash_attr}/>'
        )
        out.append(
            f'<text x="{right + 50}" y="{ly + 4}" font-size="13" font-family="sans-serif">{_esc(s.label)}</text>'
        )

    if panel.vline is not None:
        x = px(panel.vline)
        out.append(
            f'<line class="marker" x1="{x:.2f}" y1="{top}" x2="{x:.2f}" y2="{bottom}" '
            f'stroke="#555555" stroke-width="1.5" stroke-dasharray="4,4"/>'
        )
        if panel.vline_label:
            out.append(
                f'<text x="{x + 4:.2f}" y="{top + 12}" font-size="12" '
                f'font-family="sans-serif">{_esc(panel.vline_label)}</text>'
            )

    out.append(
        f'<text x="{(left + right) / 2:.1f}" y="{PANEL_H - 20}" text-anchor="middle" '
        f'font-size="14" font-family="sans-serif">{_esc(panel.x_label)}</text>'
    )
    cy = (top + bottom) / 2
    out.append(
        f'<text x="24" y="{cy:.1f}" text-anchor="middle" font-size="14" font-family="sans-serif" '
        f'transform="rotate(-90 24 {cy:.1f})">{_esc(panel.y_label)}</text>'
    )
    out.append("</g>")
    return out


def render_svg(panels: Sequence[Panel]) -> str:
    """Stack panels vertically, each in an 800x600 cell."""
    h = PANEL_H * len(panels)
    lines = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{PANEL_W}" height="{h}" '
        f'viewBox="0 0 {PANEL_W} {h}">',
        '<rect x="0" y="0" width="100%" height="100%" fill="#ffffff"/>',
    ]
    for k, panel in enumerate(panels):
        lines.extend(_render_panel(panel, k * PANEL_H))
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
