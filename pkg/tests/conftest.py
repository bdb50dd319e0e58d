"""Shared hypothesis strategies for word generation."""

from __future__ import annotations

import hypothesis.strategies as st


@st.composite
def dyck_texts(draw, max_n=12):
    """A Dyck word steered by drawn booleans (shrinks toward U^n D^n)."""
    n = draw(st.integers(0, max_n))
    bits = draw(st.lists(st.booleans(), min_size=2 * n, max_size=2 * n))
    out = []
    ups = h = 0
    for i in range(2 * n):
        left = 2 * n - i
        if h == 0 or (left > h and ups < n and bits[i]):
            out.append("U")
            ups += 1
            h += 1
        else:
            out.append("D")
            h -= 1
    return "".join(out)


@st.composite
def balanced_texts(draw, max_n=12):
    """A balanced word steered by drawn booleans."""
    n = draw(st.integers(0, max_n))
    bits = draw(st.lists(st.booleans(), min_size=2 * n, max_size=2 * n))
    out = []
    ups = 0
    for i in range(2 * n):
        downs = i - ups
        if ups < n and (downs == n or bits[i]):
            out.append("U")
            ups += 1
        else:
            out.append("D")
    return "".join(out)
