"""Path statistics and the Narayana numbers.

All statistics are defined on arbitrary step words, below the axis included:
a UD factor at height 0 is a peak, an up-step from -2 to -1 is at odd
height (mathematical parity, so -1 is odd and -2 is even).  This convention
is what makes the statistics compatible with the bilateral bijections.
"""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from .errors import NotBilateralError
from .words import PathClass, PathWord, _LONG, classify


class _Scan(NamedTuple):
    final: int
    lo: int
    hi: int
    peaks: int
    valleys: int
    contacts: int
    crossings: int
    ups: int
    ups_odd: int
    downs_odd: int


def _scan_text(text: str) -> _Scan:
    """One pass over a canonical word collecting every local statistic."""
    if len(text) >= _LONG:
        return _scan_text_long(text)
    h = lo = hi = 0
    peaks = valleys = contacts = crossings = 0
    ups = ups_odd = downs_odd = 0
    prev = ""
    for ch in text:
        if ch == "U":
            if prev == "D":
                valleys += 1
            elif prev == "U" and h == 0:
                crossings += 1
            h += 1
            ups += 1
            if h & 1:
                ups_odd += 1
            if h > hi:
                hi = h
            elif h == 0:
                contacts += 1
        else:
            if prev == "U":
                peaks += 1
            elif prev == "D" and h == 0:
                crossings += 1
            if h & 1:
                downs_odd += 1
            h -= 1
            if h < lo:
                lo = h
            elif h == 0:
                contacts += 1
        prev = ch
    return _Scan(h, lo, hi, peaks, valleys, contacts, crossings, ups, ups_odd, downs_odd)


def _scan_text_long(text: str) -> _Scan:
    arr = np.frombuffer(text.encode("ascii"), dtype=np.uint8)
    up = arr == 85
    h = np.cumsum(np.where(up, 1, -1))
    peaks = int(np.count_nonzero(up[:-1] & ~up[1:]))
    valleys = int(np.count_nonzero(~up[:-1] & up[1:]))
    contacts = int(np.count_nonzero(h == 0))
    crossings = int(np.count_nonzero((h[:-1] == 0) & (up[:-1] == up[1:])))
    ups = int(np.count_nonzero(up))
    ups_odd = int(np.count_nonzero(h[up] & 1))
    downs_odd = int(np.count_nonzero((h[~up] + 1) & 1))
    return _Scan(
        int(h[-1]),
        min(0, int(h.min())),
        max(0, int(h.max())),
        peaks,
        valleys,
        contacts,
        crossings,
        ups,
        ups_odd,
        downs_odd,
    )


class StatRecord(NamedTuple):
    """All statistics of one balanced word."""

    n: int
    peaks: int
    valleys: int
    contacts: int
    crossings: int
    ups_odd: int
    ups_even: int
    downs_odd: int
    downs_even: int
    max_height: int
    min_height: int
    is_prime: bool

    def to_text(self) -> str:
        """Flat key:value form, fields in declaration order."""
        parts = []
        for name, value in zip(self._fields, self):
            if isinstance(value, bool):
                value = "true" if value else "false"
            parts.append(f"{name}:{value}")
        return " ".join(parts)

    def to_dict(self) -> dict:
        return dict(zip(self._fields, self))


def semilength(w: PathWord) -> int:
    """Half the number of steps; requires a balanced word."""
    if w.text and w.final_height != 0:
        raise NotBilateralError("semilength is defined for balanced words only")
    return len(w.text) // 2


def peaks(w: PathWord) -> int:
    """Number of UD factors, at any height."""
    return w.text.count("UD")


def valleys(w: PathWord) -> int:
    """Number of DU factors, at any height."""
    return w.text.count("DU")


def contacts(w: PathWord) -> int:
    """Steps touching the axis from above or below.

    A contact is a down-step at height 1 or an up-step at height 0, i.e.
    exactly the steps that end on the axis.
    """
    return _scan_text(w.text).contacts


def crossings(w: PathWord) -> int:
    """Adjacent same-direction step pairs straddling the axis."""
    return _scan_text(w.text).crossings


def ups_at_odd_height(w: PathWord) -> int:
    """Up-steps whose ending height is odd (so -1 counts, -2 does not)."""
    return _scan_text(w.text).ups_odd


def ups_at_even_height(w: PathWord) -> int:
    s = _scan_text(w.text)
    return s.ups - s.ups_odd


def downs_at_odd_height(w: PathWord) -> int:
    """Down-steps whose starting height is odd."""
    return _scan_text(w.text).downs_odd


def downs_at_even_height(w: PathWord) -> int:
    s = _scan_text(w.text)
    return (len(w.text) - s.ups) - s.downs_odd


def stat_record(w: PathWord) -> StatRecord:
    """Bundle of all statistics; cached on the word after the first call."""
    cached = w._stats
    if cached is not None:
        return cached
    cls = classify(w)
    if cls is PathClass.NOT_CLOSED:
        raise NotBilateralError("statistics bundle requires a balanced word")
    rec = _stat_record_text(w.text, cls)
    w._cache("_stats", rec)
    return rec


def _stat_record_text(text: str, cls: PathClass | None = None) -> StatRecord:
    s = _scan_text(text)
    downs = len(text) - s.ups
    if cls is None:
        if not text:
            cls = PathClass.EMPTY
        elif s.lo >= 0:
            cls = PathClass.DYCK
        else:
            cls = PathClass.NEGATIVE_DYCK if s.hi <= 0 else PathClass.BILATERAL_PROPER
    return StatRecord(
        n=len(text) // 2,
        peaks=s.peaks,
        valleys=s.valleys,
        contacts=s.contacts,
        crossings=s.crossings,
        ups_odd=s.ups_odd,
        ups_even=s.ups - s.ups_odd,
        downs_odd=s.downs_odd,
        downs_even=downs - s.downs_odd,
        max_height=s.hi,
        min_height=s.lo,
        is_prime=(cls is PathClass.DYCK and s.contacts == 1),
    )


def narayana(n: int, k: int) -> int:
    """N(n, k) = C(n, k) * C(n, k-1) / n, exactly.

    Counts Dyck words of semilength n with k peaks (equivalently with k
    up-steps at odd height).  Zero outside 1 <= k <= n.  Python integers
    are arbitrary precision, so no overflow can occur; exact divisibility
    is asserted as a sanity check.
    """
    if n < 1:
        raise ValueError("narayana requires n >= 1")
    if k < 1 or k > n:
        return 0
    num = math.comb(n, k) * math.comb(n, k - 1)
    q, r = divmod(num, n)
    assert r == 0, "Narayana product must be divisible by n"
    return q
