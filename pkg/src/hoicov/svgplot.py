"""Minimal deterministic SVG 1.1 line charts (no plotting dependency)."""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

PALETTE = (
    "#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b",
    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#aec7e8", "#ffbb78",
)
WIDTH, HEIGHT = 840, 480
MARGIN_LEFT, MARGIN_RIGHT, MARGIN_TOP, MARGIN_BOTTOM = 64, 180, 40, 48


def _ticks(lo: float, hi: float, n: int = 6) -> list[float]:
    if hi <= lo:
        hi = lo + 1.0
    raw = (hi - lo) / max(n - 1, 1)
    mag = 10.0 ** math.floor(math.log10(raw))
    step = min(s for s in (mag, 2 * mag, 2.5 * mag, 5 * mag, 10 * mag) if s >= raw)
    start = math.ceil(lo / step) * step
    ticks = []
    t = start
    while t <= hi + 1e-12 * step:
        ticks.append(round(t, 12))
        t += step
    return ticks


def write_line_chart(path, x, series: dict, *, title: str = "",
                     xlabel: str = "", ylabel: str = "") -> None:
    """Write one SVG line chart; NaN values break the polyline."""
    x = np.asarray(x, dtype=float)
    arrays = {name: np.asarray(v, dtype=float) for name, v in series.items()}
    finite = [v[np.isfinite(v)] for v in arrays.values()]
    all_y = np.concatenate([v for v in finite if v.size]) if finite else np.array([0.0])
    if all_y.size == 0:
        all_y = np.array([0.0])
    ylo, yhi = float(np.min(all_y)), float(np.max(all_y))
    if yhi == ylo:
        ylo, yhi = ylo - 1.0, yhi + 1.0
    pad = 0.05 * (yhi - ylo)
    ylo, yhi = ylo - pad, yhi + pad
    xlo, xhi = float(np.min(x)), float(np.max(x))
    if xhi == xlo:
        xhi = xlo + 1.0
    plot_w = WIDTH - MARGIN_LEFT - MARGIN_RIGHT
    plot_h = HEIGHT - MARGIN_TOP - MARGIN_BOTTOM

    def sx(v: float) -> float:
        return MARGIN_LEFT + (v - xlo) / (xhi - xlo) * plot_w

    def sy(v: float) -> float:
        return MARGIN_TOP + (yhi - v) / (yhi - ylo) * plot_h

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{WIDTH}" height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
        f'<text x="{WIDTH / 2:.1f}" y="24" text-anchor="middle" '
        f'font-family="sans-serif" font-size="16">{title}</text>',
    ]
    axis_bottom = MARGIN_TOP + plot_h
    axis_right = MARGIN_LEFT + plot_w
    for t in _ticks(xlo, xhi):
        if not xlo <= t <= xhi:
            continue
        px = sx(t)
        out.append(f'<line x1="{px:.2f}" y1="{axis_bottom:.2f}" x2="{px:.2f}" '
                   f'y2="{axis_bottom + 5:.2f}" stroke="black"/>')
        out.append(f'<text x="{px:.2f}" y="{axis_bottom + 18:.2f}" text-anchor="middle" '
                   f'font-family="sans-serif" font-size="11">{t:g}</text>')
    for t in _ticks(ylo, yhi):
        if not ylo <= t <= yhi:
            continue
        py = sy(t)
        out.append(f'<line x1="{MARGIN_LEFT - 5:.2f}" y1="{py:.2f}" '
                   f'x2="{MARGIN_LEFT:.2f}" y2="{py:.2f}" stroke="black"/>')
        out.append(f'<text x="{MARGIN_LEFT - 8:.2f}" y="{py + 4:.2f}" text-anchor="end" '
                   f'font-family="sans-serif" font-size="11">{t:g}</text>')
        out.append(f'<line x1="{MARGIN_LEFT:.2f}" y1="{py:.2f}" x2="{axis_right:.2f}" '
                   f'y2="{py:.2f}" stroke="#dddddd"/>')
    if ylo < 0 < yhi:
        py = sy(0.0)
        out.append(f'<line x1="{MARGIN_LEFT:.2f}" y1="{py:.2f}" x2="{axis_right:.2f}" '
                   f'y2="{py:.2f}" stroke="#888888" stroke-dasharray="4,3"/>')
    out.append(f'<line x1="{MARGIN_LEFT}" y1="{axis_bottom}" x2="{axis_right}" '
               f'y2="{axis_bottom}" stroke="black"/>')
    out.append(f'<line x1="{MARGIN_LEFT}" y1="{MARGIN_TOP}" x2="{MARGIN_LEFT}" '
               f'y2="{axis_bottom}" stroke="black"/>')
    out.append(f'<text x="{MARGIN_LEFT + plot_w / 2:.1f}" y="{HEIGHT - 10}" '
               f'text-anchor="middle" font-family="sans-serif" font-size="13">{xlabel}</text>')
    out.append(f'<text x="18" y="{MARGIN_TOP + plot_h / 2:.1f}" text-anchor="middle" '
               f'font-family="sans-serif" font-size="13" '
               f'transform="rotate(-90 18 {MARGIN_TOP + plot_h / 2:.1f})">{ylabel}</text>')
    for j, (name, y) in enumerate(arrays.items()):
        color = PALETTE[j % len(PALETTE)]
        segment: list[str] = []
        segments: list[list[str]] = []
        for xv, yv in zip(x, y):
            if math.isfinite(yv):
                segment.append(f"{sx(xv):.2f},{sy(yv):.2f}")
            elif segment:
                segments.append(segment)
                segment = []
        if segment:
            segments.append(segment)
        for seg in segments:
            if len(seg) == 1:
                cx, cy = seg[0].split(",")
                out.append(f'<circle cx="{cx}" cy="{cy}" r="2" fill="{color}"/>')
            else:
                out.append(f'<polyline points="{" ".join(seg)}" fill="none" '
                           f'stroke="{color}" stroke-width="1.5"/>')
        ly = MARGIN_TOP + 14 + 16 * j
        lx = axis_right + 12
        out.append(f'<line x1="{lx}" y1="{ly - 4}" x2="{lx + 18}" y2="{ly - 4}" '
                   f'stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{lx + 24}" y="{ly}" font-family="sans-serif" '
                   f'font-size="11">{name}</text>')
    out.append("</svg>")
    Path(path).write_text("\n".join(out) + "\n", encoding="utf-8")
