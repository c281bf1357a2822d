"""Static SVG drawing of a quasi-diagram on a labelled n-gon."""

from __future__ import annotations

import math

from .diagram import QuasiDiagram


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def to_svg(d: QuasiDiagram, size: int = 300) -> str:
    """Sides ``1..n`` run clockwise from the top; each chord joins two side midpoints.

    For ``n < 3`` the boundary is a circle cut into ``n`` arcs.
    """
    n = d.n
    c = size / 2
    r = size * 0.38
    # vertex k sits between sides k and k+1; side 1 is centred at the top
    verts = [
        (c + r * math.sin(2 * math.pi * (k + 0.5) / n), c - r * math.cos(2 * math.pi * (k + 0.5) / n))
        for k in range(n)
    ] if n else []

    def side_mid(i: int, scale: float = 1.0) -> tuple[float, float]:
        angle = 2 * math.pi * (i - 1) / n
        rr = r * math.cos(math.pi / n) if n >= 3 else r
        return c + scale * rr * math.sin(angle), c - scale * rr * math.cos(angle)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}">',
        f"<title>{d} (n={n})</title>",
    ]
    if n >= 3:
        pts = " ".join(f"{_fmt(x)},{_fmt(y)}" for x, y in verts)
        out.append(f'<polygon points="{pts}" fill="none" stroke="black" stroke-width="1.5"/>')
    elif n:
        out.append(f'<circle cx="{_fmt(c)}" cy="{_fmt(c)}" r="{_fmt(r)}" fill="none" '
                   f'stroke="black" stroke-width="1.5"/>')
        for x, y in verts:
            out.append(f'<line x1="{_fmt(x)}" y1="{_fmt(y)}" x2="{_fmt(c + (x - c) * 1.08)}" '
                       f'y2="{_fmt(c + (y - c) * 1.08)}" stroke="black"/>')
    for i in range(1, n + 1):
        x, y = side_mid(i, 1.0 + 28 / (r or 1))
        out.append(f'<text x="{_fmt(x)}" y="{_fmt(y)}" font-size="14" '
                   f'text-anchor="middle" dominant-baseline="middle">{i}</text>')
    for a, b in d.chords():
        (x1, y1), (x2, y2) = side_mid(a), side_mid(b)
        out.append(f'<line x1="{_fmt(x1)}" y1="{_fmt(y1)}" x2="{_fmt(x2)}" y2="{_fmt(y2)}" '
                   f'stroke="magenta" stroke-width="2"/>')
    for i in d.isolated_points():
        x, y = side_mid(i)
        out.append(f'<circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="black"/>')
    out.append("</svg>")
    return "\n".join(out) + "\n"
