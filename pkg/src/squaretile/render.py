"""Drawings and Bouwkamp-style text for a tiling.

Tiling coordinates have y pointing up; SVG has y pointing down, so rows
are mirrored inside the region's box. The viewBox is exactly the region,
which also clips window patches whose squares stick out past the edges.
"""

from __future__ import annotations

import colorsys
from itertools import groupby
from pathlib import Path
from xml.sax.saxutils import escape

from .tiling import Rect, Tiling, sorted_squares

_GOLDEN = 0.6180339887498949


def side_colour(side: int) -> str:
    """Fixed pastel colour for a side length; odd sides get a warmer band."""
    hue = (side * _GOLDEN) % 1.0
    sat, light = (0.55, 0.62) if side % 2 else (0.35, 0.78)
    r, g, b = colorsys.hls_to_rgb(hue, light, sat)
    return "#{:02x}{:02x}{:02x}".format(round(r * 255), round(g * 255), round(b * 255))


def _frame(t: Tiling) -> tuple[int, int, int, int]:
    return t.region.bounds


def svg_document(t: Tiling, stroke_ratio: int = 400) -> str:
    x0, y0, x1, y1 = _frame(t)
    w, h = x1 - x0, y1 - y0
    stroke = max(w, h) / stroke_ratio
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{x0} {y0} {w} {h}" '
        f'width="{_px(w, h)[0]}" height="{_px(w, h)[1]}">',
        f'<g stroke="#222" stroke-width="{stroke:g}" font-family="sans-serif" '
        'text-anchor="middle" dominant-baseline="central">',
    ]
    for p in sorted_squares(t.squares):
        top = y0 + y1 - p.y1  # mirror so y grows upward
        cx, cy = p.x * 2 + p.side, top * 2 + p.side  # doubled centre keeps ints
        lines.append(
            f'<rect x="{p.x}" y="{top}" width="{p.side}" height="{p.side}" '
            f'fill="{side_colour(p.side)}"/>'
        )
        lines.append(
            f'<text x="{_half(cx)}" y="{_half(cy)}" font-size="{_half(p.side * 4 // 5 or 1)}" '
            f'stroke="none" fill="#111">{escape(str(p.side))}</text>'
        )
    lines += ["</g>", "</svg>", ""]
    return "\n".join(lines)


def _half(n: int) -> str:
    """n / 2 written without floats."""
    return str(n // 2) if n % 2 == 0 else f"{n // 2}.5" if n > 0 else f"-{(-n) // 2}.5"


def _px(w: int, h: int, longest: int = 800) -> tuple[int, int]:
    if w >= h:
        return longest, max(1, longest * h // w)
    return max(1, longest * w // h), longest


def render_svg(t: Tiling, out) -> str:
    """Write the SVG for ``t`` to ``out`` (a path) and return the document."""
    doc = svg_document(t)
    Path(out).write_text(doc, encoding="utf-8")
    return doc


def bouwkamp(t: Tiling) -> str:
    """Side lengths row by row: squares sharing a top edge, top row first.

    Each row is a parenthesised, comma-separated list read left to right,
    preceded by the region size, e.g. ``33x32 (18,15)(7,8)...``.
    """
    x0, y0, x1, y1 = _frame(t)
    key = lambda p: (-p.y1, p.x)
    rows = []
    for _, grp in groupby(sorted(t.squares, key=key), key=lambda p: p.y1):
        rows.append("(" + ",".join(str(p.side) for p in grp) + ")")
    head = f"{x1 - x0}x{y1 - y0}"
    return f"{head} {''.join(rows)}"


def render_png(t: Tiling, out, dpi: int = 150, title: str | None = None) -> None:
    """Matplotlib rendering of ``t``, saved to ``out``."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
    from matplotlib.patches import Rectangle

    x0, y0, x1, y1 = _frame(t)
    w, h = x1 - x0, y1 - y0
    fig_w = 6.0
    fig, ax = plt.subplots(figsize=(fig_w, max(1.5, fig_w * h / w)))
    for p in sorted_squares(t.squares):
        ax.add_patch(Rectangle((p.x, p.y), p.side, p.side, facecolor=side_colour(p.side),
                               edgecolor="#222", linewidth=0.6))
        cx, cy = p.x + p.side / 2, p.y + p.side / 2
        if x0 <= cx <= x1 and y0 <= cy <= y1:
            ax.text(cx, cy, str(p.side), ha="center", va="center",
                    fontsize=max(4, min(14, 120 * p.side / max(w, h))))
    ax.set_xlim(x0, x1)
    ax.set_ylim(y0, y1)
    ax.set_aspect("equal")
    ax.set_xticks([])
    ax.set_yticks([])
    if title is None:
        title = f"{w} x {h}" if isinstance(t.region, Rect) else f"window [{x0}, {x1}) x [{y0}, {y1})"
    ax.set_title(title, fontsize=10)
    fig.tight_layout()
    fig.savefig(out, dpi=dpi, metadata={"Software": None})
    plt.close(fig)
