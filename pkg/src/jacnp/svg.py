"""Minimal SVG drawing of a Newton polygon (presentational only)."""

from __future__ import annotations

from fractions import Fraction
from xml.sax.saxutils import escape

from .polygon import Polygon


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def polygon_svg(P: Polygon, size: int = 400, margin: int = 40) -> str:
    verts = P.vertices()
    width = max(float(P.width), 1.0)
    height = max(float(P.height), 1.0)
    # extend the axis rays a little beyond the last vertices
    sx = (size - 2 * margin) / (width * 1.15)
    sy = (size - 2 * margin) / (height * 1.15)

    def pt(x, y):
        return margin + float(x) * sx, size - margin - float(y) * sy

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}" font-family="sans-serif" font-size="12">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    ox, oy = pt(0, 0)
    parts.append(f'<line x1="{ox}" y1="{oy}" x2="{size - margin / 2}" y2="{oy}" stroke="#999"/>')
    parts.append(f'<line x1="{ox}" y1="{oy}" x2="{ox}" y2="{margin / 2}" stroke="#999"/>')
    parts.append(f'<text x="{size - margin / 2}" y="{oy + 15}">u</text>')
    parts.append(f'<text x="{ox - 15}" y="{margin / 2}">v</text>')

    # unbounded rays: up from the first vertex, right from the last
    x0, y0 = pt(*verts[0])
    x1, y1 = pt(*verts[-1])
    parts.append(f'<line x1="{x0}" y1="{y0}" x2="{x0}" y2="{margin / 2}" '
                 'stroke="black" stroke-dasharray="4 3"/>')
    parts.append(f'<line x1="{x1}" y1="{y1}" x2="{size - margin / 2}" y2="{y1}" '
                 'stroke="black" stroke-dasharray="4 3"/>')

    for (a, b), t in zip(zip(verts, verts[1:]), P.terms):
        (xa, ya), (xb, yb) = pt(*a), pt(*b)
        parts.append(f'<line x1="{xa}" y1="{ya}" x2="{xb}" y2="{yb}" stroke="black" stroke-width="2"/>')
        mx, my = (xa + xb) / 2, (ya + yb) / 2
        parts.append(f'<text x="{mx + 6}" y="{my - 6}" fill="#b00">{escape(_fmt(t.inclination))}</text>')
    for a, b in verts:
        x, y = pt(a, b)
        parts.append(f'<circle cx="{x}" cy="{y}" r="3" fill="black"/>')
        parts.append(f'<text x="{x + 5}" y="{y + 14}" font-size="10">({_fmt(a)}, {_fmt(b)})</text>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def write_svg(P: Polygon, path: str) -> None:
    with open(path, "w") as fh:
        fh.write(polygon_svg(P))
