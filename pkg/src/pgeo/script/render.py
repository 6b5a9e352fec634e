"""SVG drawing of the affine chart z = 1.

Geometry stays exact until the last step; floats appear only when a
coordinate is written into the document.
"""
from __future__ import annotations

import math
from collections.abc import Mapping
from fractions import Fraction
from html import escape
from pathlib import Path

from .. import linalg
from ..conic import Conic
from ..plane import HomLine, HomPoint

DEFAULT_VIEWPORT = (Fraction(-5), Fraction(-5), Fraction(5), Fraction(5))
CONIC_SAMPLES = 128
_R = 3  # disk radius, px


def parse_viewport(text: str) -> tuple:
    parts = [Fraction(p.strip()) for p in text.split(",")]
    if len(parts) != 4:
        raise ValueError("viewport needs four numbers x0,y0,x1,y1")
    return _check_viewport(tuple(parts))


def _check_viewport(vp) -> tuple:
    x0, y0, x1, y1 = (Fraction(v) for v in vp)
    if not (x0 < x1 and y0 < y1):
        raise ValueError(f"empty viewport {vp}")
    return x0, y0, x1, y1


class Chart:
    """Maps exact affine coordinates into pixel space."""

    def __init__(self, viewport=None, width: int = 600):
        self.x0, self.y0, self.x1, self.y1 = _check_viewport(viewport or DEFAULT_VIEWPORT)
        self.scale = Fraction(width) / (self.x1 - self.x0)
        self.width = width
        self.height = float((self.y1 - self.y0) * self.scale)

    def px(self, x, y) -> tuple[float, float]:
        return float((x - self.x0) * self.scale), float((self.y1 - y) * self.scale)

    def inside(self, x, y) -> bool:
        return self.x0 <= x <= self.x1 and self.y0 <= y <= self.y1

    def clip_line(self, l: HomLine):
        """Endpoints of l inside the viewport, or None when l misses it."""
        a, b, c = (Fraction(v) for v in l.coords)
        hits = set()
        if b:
            for x in (self.x0, self.x1):
                y = -(a * x + c) / b
                if self.y0 <= y <= self.y1:
                    hits.add((x, y))
        if a:
            for y in (self.y0, self.y1):
                x = -(b * y + c) / a
                if self.x0 <= x <= self.x1:
                    hits.add((x, y))
        if len(hits) < 2:
            return None
        pts = sorted(hits)
        return pts[0], pts[-1]

    def boundary_hit(self, dx, dy):
        """Where the ray from the viewport centre in direction (dx, dy) leaves it."""
        cx, cy = (self.x0 + self.x1) / 2, (self.y0 + self.y1) / 2
        ts = []
        if dx:
            ts.append(((self.x1 if dx > 0 else self.x0) - cx) / dx)
        if dy:
            ts.append(((self.y1 if dy > 0 else self.y0) - cy) / dy)
        t = min(ts)
        return cx + t * dx, cy + t * dy


def _f(v: float) -> str:
    s = f"{v:.3f}"
    return "0.000" if s == "-0.000" else s


def _label(x: float, y: float, text: str, cls: str) -> str:
    return f'<text class="{cls}" x="{_f(x)}" y="{_f(y)}">{escape(text)}</text>'


def _draw_point(chart: Chart, name: str, P: HomPoint) -> list[str]:
    x, y, z = P.coords
    if z:
        ax, ay = Fraction(x, z), Fraction(y, z)
        if not chart.inside(ax, ay):
            return []
        u, v = chart.px(ax, ay)
        return [
            f'<circle class="point" cx="{_f(u)}" cy="{_f(v)}" r="{_R}"/>',
            _label(u + 5, v - 5, name, "point-label"),
        ]
    # point at infinity: arrow on the boundary pointing along (x, y)
    bx, by = chart.boundary_hit(Fraction(x), Fraction(y))
    u, v = chart.px(bx, by)
    norm = math.hypot(x, y)
    ux, uy = x / norm, -y / norm  # pixel space flips y
    size = 10.0
    back = (u - size * ux, v - size * uy)
    side = (-uy * size / 2, ux * size / 2)
    pts = [(u, v), (back[0] + side[0], back[1] + side[1]), (back[0] - side[0], back[1] - side[1])]
    poly = " ".join(f"{_f(a)},{_f(b)}" for a, b in pts)
    lx, ly = u - 2.2 * size * ux, v - 2.2 * size * uy
    return [f'<polygon class="ideal-point" points="{poly}"/>', _label(lx, ly, name, "point-label")]


def _draw_line(chart: Chart, name: str, l: HomLine) -> list[str]:
    seg = chart.clip_line(l)
    if seg is None:
        return []
    (xa, ya), (xb, yb) = seg
    u1, v1 = chart.px(xa, ya)
    u2, v2 = chart.px(xb, yb)
    # label a quarter of the way along, nudged off the line
    lu, lv = u1 + (u2 - u1) / 4, v1 + (v2 - v1) / 4
    return [
        f'<line class="line" x1="{_f(u1)}" y1="{_f(v1)}" x2="{_f(u2)}" y2="{_f(v2)}"/>',
        _label(lu + 4, lv - 4, name, "line-label"),
    ]


def conic_samples(k: Conic, n: int = CONIC_SAMPLES) -> list[tuple]:
    """n exact points of k, second intersections with lines through k.U.

    The directions step by pi/n, so by the inscribed angle theorem the samples
    of a circle are evenly spaced. Directions are rational approximations of
    (cos, sin); the returned homogeneous vectors vary continuously with the
    angle, so a sign change of z marks a passage through infinity.
    """
    M = k.matrix
    p = [Fraction(c) for c in k.U.coords]
    out = []
    for j in range(n):
        t = math.pi * j / n
        q = [Fraction(math.cos(t)).limit_denominator(10**6), Fraction(math.sin(t)).limit_denominator(10**6), Fraction(0)]
        Mq = linalg.matvec(M, q)
        qq, pq = linalg.dot(q, Mq), linalg.dot(p, Mq)
        out.append(tuple(-qq * a + 2 * pq * b for a, b in zip(p, q)))
    return out


def conic_pieces(k: Conic, n: int = CONIC_SAMPLES) -> list[list[tuple]]:
    """Affine polylines of the sampled conic; one closed loop when it stays finite."""
    raw = conic_samples(k, n)
    ok = [r[2] != 0 for r in raw]
    breaks = [
        j for j in range(n)
        if not ok[j] or not ok[(j + 1) % n] or (raw[j][2] > 0) != (raw[(j + 1) % n][2] > 0)
    ]
    aff = [(r[0] / r[2], r[1] / r[2]) if r[2] else None for r in raw]
    if not breaks:
        return [aff + [aff[0]]]
    pieces = []
    start = breaks[0] + 1
    cur: list = []
    for i in range(n):
        j = (start + i) % n
        if aff[j] is not None:
            cur.append(aff[j])
        if j in breaks:
            if len(cur) > 1:
                pieces.append(cur)
            cur = []
    if len(cur) > 1:
        pieces.append(cur)
    return pieces


def _draw_conic(chart: Chart, name: str, k: Conic) -> list[str]:
    out = []
    label_at = None
    for piece in conic_pieces(k):
        pts = [chart.px(x, y) for x, y in piece]
        out.append('<polyline class="conic" points="' + " ".join(f"{_f(a)},{_f(b)}" for a, b in pts) + '"/>')
        if label_at is None:
            label_at = next((chart.px(x, y) for x, y in piece if chart.inside(x, y)), None)
    if label_at is not None:
        out.append(_label(label_at[0] + 5, label_at[1] - 5, name, "conic-label"))
    return out


_STYLE = (
    ".point{fill:#000}.ideal-point{fill:#a33}"
    ".line{stroke:#246;stroke-width:1.2}"
    ".conic{fill:none;stroke:#384;stroke-width:1.2}"
    "text{font-family:sans-serif;font-size:12px}"
)


def svg_document(env, viewport=None, width: int = 600) -> str:
    """SVG text for every point, line and conic of env, in declaration order."""
    chart = Chart(viewport, width)
    items = env.items() if isinstance(env, Mapping) or hasattr(env, "items") else env
    body = []
    for name, value in items:
        if isinstance(value, HomPoint):
            body += _draw_point(chart, name, value)
        elif isinstance(value, HomLine):
            body += _draw_line(chart, name, value)
        elif isinstance(value, Conic):
            body += _draw_conic(chart, name, value)
    w, h = _f(chart.width), _f(chart.height)
    head = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">',
        f"<style>{_STYLE}</style>",
        f'<clipPath id="chart"><rect x="0" y="0" width="{w}" height="{h}"/></clipPath>',
        f'<rect class="frame" x="0" y="0" width="{w}" height="{h}" fill="#fff" stroke="#999"/>',
        '<g clip-path="url(#chart)">',
    ]
    return "\n".join(head + body + ["</g>", "</svg>"]) + "\n"


def render_svg(env, path=None, viewport=None, width: int = 600) -> str:
    """Render env; write it to path when one is given. Returns the SVG text."""
    text = svg_document(env, viewport, width)
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
