"""Scenes, deterministic SVG output and CSV export of sampled curves.

SVG is written by hand: every coordinate goes through ``'{:.9g}'`` so that
identical inputs give byte-identical files.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from xml.sax.saxutils import escape

import numpy as np

from .geom_core import CurveSamples

CSV_HEADER = ("curve_id", "alpha", "t_or_theta", "x", "y")
PAD = 0.05

# style tag -> SVG presentation attributes
STYLES = {
    "family": 'fill="none" stroke="#4477aa" stroke-width="0.8" stroke-opacity="0.75"',
    "envelope": 'fill="none" stroke="#cc3311" stroke-width="2"',
    "locus": 'fill="none" stroke="#228833" stroke-width="1.6" stroke-dasharray="6 3"',
    "oval": 'fill="none" stroke="#ee7733" stroke-width="1.8"',
    "dots": 'fill="#aa3377" stroke="none"',
    "vertices": 'fill="#228833" stroke="none"',
    "marker": 'fill="#000000" stroke="none"',
}


def fmt(v: float) -> str:
    s = "{:.9g}".format(v)
    return "0" if s == "-0" else s


@dataclass(frozen=True)
class Scene:
    curves: list = field(default_factory=list)   # (CurveSamples, style, label)
    viewport: tuple[float, float, float, float] | None = None
    title: str = ""

    def __post_init__(self):
        for _, style, _ in self.curves:
            if style not in STYLES:
                raise ValueError(f"unknown style tag {style!r}")
        vp = self.viewport if self.viewport is not None else fit_viewport(self.curves)
        xmin, xmax, ymin, ymax = vp
        if not (xmax > xmin and ymax > ymin):
            raise ValueError(f"degenerate viewport {vp}")
        object.__setattr__(self, "viewport", tuple(float(v) for v in vp))
        object.__setattr__(self, "curves", list(self.curves))

    def count(self, style: str) -> int:
        return sum(1 for _, s, _ in self.curves if s == style)


def fit_viewport(curves, pad: float = PAD) -> tuple[float, float, float, float]:
    """Bounding box of all curve points, padded by ``pad`` of each span."""
    if not curves:
        return (-1.0, 1.0, -1.0, 1.0)
    pts = np.concatenate([c.points for c, _, _ in curves])
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    span = hi - lo
    # a flat box borrows the other span (or 1) so the viewport stays open
    fallback = span.max() if span.max() > 0 else 1.0
    span = np.where(span > 0, span, fallback)
    lo, hi = lo - pad * span, hi + pad * span
    return (float(lo[0]), float(hi[0]), float(lo[1]), float(hi[1]))


def render_svg(scene: Scene, width: int = 800, max_height: int = 1200) -> str:
    xmin, xmax, ymin, ymax = scene.viewport
    margin = 10
    top = 30 if scene.title else margin
    inner_w = width - 2 * margin
    scale = inner_w / (xmax - xmin)
    inner_h = (ymax - ymin) * scale
    if inner_h > max_height:
        scale *= max_height / inner_h
        inner_h = max_height
    height = int(math.ceil(inner_h)) + top + margin
    ox = margin + 0.5 * (inner_w - (xmax - xmin) * scale)

    def sx(x):
        return ox + (x - xmin) * scale

    def sy(y):
        return top + (ymax - y) * scale

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" '
        f'height="{height}" viewBox="0 0 {width} {height}">',
        f'<rect x="0" y="0" width="{width}" height="{height}" fill="#ffffff"/>',
    ]
    if scene.title:
        out.append(f'<text x="{margin}" y="20" font-family="sans-serif" '
                   f'font-size="14">{escape(scene.title)}</text>')
    # axes through the origin when it is in view
    if xmin < 0 < xmax:
        out.append(f'<line class="axis" x1="{fmt(sx(0))}" y1="{fmt(sy(ymax))}" '
                   f'x2="{fmt(sx(0))}" y2="{fmt(sy(ymin))}" stroke="#bbbbbb" stroke-width="0.5"/>')
    if ymin < 0 < ymax:
        out.append(f'<line class="axis" x1="{fmt(sx(xmin))}" y1="{fmt(sy(0))}" '
                   f'x2="{fmt(sx(xmax))}" y2="{fmt(sy(0))}" stroke="#bbbbbb" stroke-width="0.5"/>')

    for k, (cs, style, label) in enumerate(scene.curves):
        attrs = STYLES[style]
        out.append(f'<g id="curve-{k}" class="{style}">')
        out.append(f"<title>{escape(label)}</title>")
        if style in ("dots", "vertices", "marker"):
            r = "3.5" if style == "marker" else "1.5"
            for x, y in cs.points:
                out.append(f'<circle cx="{fmt(sx(x))}" cy="{fmt(sy(y))}" r="{r}" {attrs}/>')
            if style == "marker":
                x, y = cs.points[0]
                out.append(f'<text x="{fmt(sx(x) + 5)}" y="{fmt(sy(y) - 5)}" '
                           f'font-family="sans-serif" font-size="12">{escape(label)}</text>')
        else:
            for piece in cs.pieces():
                d = " ".join(f"{'M' if i == 0 else 'L'}{fmt(sx(x))} {fmt(sy(y))}"
                             for i, (x, y) in enumerate(piece))
                if cs.closed and len(piece) > 2:
                    d += " Z"
                out.append(f'<path class="{style}" d="{d}" {attrs}/>')
        out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def write_csv(scene: Scene) -> str:
    """One row per sample point; ``curve_id`` is ``index:label``."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for k, (cs, _, label) in enumerate(scene.curves):
        cid = f"{k}:{label}"
        for (x, y), al, t in zip(cs.points, cs.alpha, cs.param):
            w.writerow((cid, fmt(al), fmt(t), fmt(x), fmt(y)))
    return buf.getvalue()


def read_csv(text: str) -> dict[str, CurveSamples]:
    """Parse :func:`write_csv` output back into samples keyed by curve id."""
    rows = list(csv.reader(io.StringIO(text)))
    if not rows or tuple(rows[0]) != CSV_HEADER:
        raise ValueError(f"missing CSV header {','.join(CSV_HEADER)}")
    grouped: dict[str, list] = {}
    for row in rows[1:]:
        cid, al, t, x, y = row
        grouped.setdefault(cid, []).append((float(al), float(t), float(x), float(y)))
    out = {}
    for cid, vals in grouped.items():
        arr = np.array(vals)
        out[cid] = CurveSamples(arr[:, 2:], arr[:, 0], arr[:, 1])
    return out
