"""Deterministic SVG diagrams of braid words.

Strands run top to bottom and the leftmost letter is drawn at the top.  For
``sigma_i`` the strand entering at position ``i`` passes over; for the
inverse it passes under.  Each letter is one ``<g class="crossing">`` band.
"""

from __future__ import annotations

from .braidcalc import BraidWord

DX = 40
DY = 48
MARGIN = 24
GAP = 0.18  # fraction of the diagonal left blank around the over-strand


def _line(x1, y1, x2, y2, cls="strand"):
    return f'<line class="{cls}" x1="{x1:.2f}" y1="{y1:.2f}" x2="{x2:.2f}" y2="{y2:.2f}"/>'


def render_svg(b: BraidWord) -> str:
    m = b.m
    bands = max(len(b), 1)
    width = 2 * MARGIN + (m - 1) * DX
    height = 2 * MARGIN + bands * DY
    x = lambda pos: MARGIN + (pos - 1) * DX  # noqa: E731
    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f"<title>braid on {m} strands: {b or 'identity'}</title>",
        '<g fill="none" stroke="black" stroke-width="2" stroke-linecap="round">',
    ]
    if not b.letters:
        out.append('<g class="band">')
        for pos in range(1, m + 1):
            out.append(_line(x(pos), MARGIN, x(pos), MARGIN + DY))
        out.append("</g>")
    for row, a in enumerate(b.letters):
        i = abs(a)
        y0, y1 = MARGIN + row * DY, MARGIN + (row + 1) * DY
        label = f"s{i}" + ("'" if a < 0 else "")
        out.append(f'<g class="crossing" data-letter="{label}">')
        for pos in range(1, m + 1):
            if pos not in (i, i + 1):
                out.append(_line(x(pos), y0, x(pos), y1))
        # over-strand is drawn whole; the under-strand is split around the centre
        if a > 0:
            over = (x(i), y0, x(i + 1), y1)
            under = (x(i + 1), y0, x(i), y1)
        else:
            over = (x(i + 1), y0, x(i), y1)
            under = (x(i), y0, x(i + 1), y1)
        out.append(_line(*over, cls="over"))
        ux0, uy0, ux1, uy1 = under
        lo, hi = 0.5 - GAP, 0.5 + GAP
        out.append(_line(ux0, uy0, ux0 + lo * (ux1 - ux0), uy0 + lo * (uy1 - uy0), cls="under"))
        out.append(_line(ux0 + hi * (ux1 - ux0), uy0 + hi * (uy1 - uy0), ux1, uy1, cls="under"))
        out.append("</g>")
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
