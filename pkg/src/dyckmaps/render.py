"""ASCII rendering of step words."""

from __future__ import annotations

from .errors import NotBilateralError
from .words import PathWord


def render_ascii(w: PathWord) -> str:
    """Draw a balanced word, one column per step, '/' up and '\\' down.

    The band between heights j-1 and j holds the glyphs of the steps at
    height j; bands are stacked top down and a rule of '-' characters marks
    the axis.  The glyph block is max_height - min_height rows tall.
    """
    if w.text and w.final_height != 0:
        raise NotBilateralError("rendering requires a balanced word")
    text = w.text
    if not text:
        return ""
    heights = w._height_list()
    hi, lo = w.max_height, w.min_height
    rows = []
    for band in range(hi, lo, -1):
        cells = []
        prev = 0
        for i, ch in enumerate(text):
            h = heights[i]
            top = prev if prev > h else h
            if top == band:
                cells.append("/" if ch == "U" else "\\")
            else:
                cells.append(" ")
            prev = h
        rows.append("".join(cells).rstrip())
    rows.insert(hi, "-" * len(text))
    return "\n".join(rows)
