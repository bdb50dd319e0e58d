"""Step words: representation, validation, classification, height bookkeeping.

A word is a finite sequence of up-steps (+1) and down-steps (-1) read as a
walk starting at height 0.  Everything else in the library (statistics,
decompositions, bijections, enumeration) operates on these words.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import InvalidCharacterError, NotADyckWordError, NotBilateralError

# Accepted input alphabets: U/D canonical, u/d case-folded, (/) aliases.
_ALIAS_TABLE = str.maketrans("ud()", "UDUD")
_FLIP_TABLE = str.maketrans("UD", "DU")

# Above this many steps, height scans switch to vectorised numpy passes.
_LONG = 4096

_UD = frozenset("UD")


class Step(Enum):
    """One lattice step; serialized as 'U' or 'D'."""

    UP = "U"
    DOWN = "D"

    @property
    def char(self) -> str:
        return self.value

    @property
    def delta(self) -> int:
        return 1 if self is Step.UP else -1

    @property
    def flipped(self) -> "Step":
        return Step.DOWN if self is Step.UP else Step.UP


class PathClass(Enum):
    """Classification of a step word.

    EMPTY             the zero-length word
    DYCK              nonempty, returns to 0, never dips below 0
    NEGATIVE_DYCK     nonempty, returns to 0, never rises above 0
    BILATERAL_PROPER  returns to 0 and visits both signs
    NOT_CLOSED        does not end at height 0 (not a balanced word at all)
    """

    EMPTY = "empty"
    DYCK = "dyck"
    NEGATIVE_DYCK = "negative_dyck"
    BILATERAL_PROPER = "bilateral_proper"
    NOT_CLOSED = "not_closed"


# Vertex heights after each step; the start vertex at height 0 is implicit.
HeightProfile = list


def _extremes_of(text: str) -> tuple[int, int, int]:
    """(final, min, max) vertex height of a canonical word, start vertex included."""
    if len(text) >= _LONG:
        arr = np.frombuffer(text.encode("ascii"), dtype=np.uint8)
        h = np.cumsum(np.where(arr == 85, 1, -1))
        return int(h[-1]), min(0, int(h.min())), max(0, int(h.max()))
    h = lo = hi = 0
    for ch in text:
        h = h + 1 if ch == "U" else h - 1
        if h < lo:
            lo = h
        elif h > hi:
            hi = h
    return h, lo, hi


class PathWord:
    """Immutable validated step word.

    Construction requires canonical text over {U, D}; use :func:`parse_word`
    for the lenient alphabets.  Height extremes and the vertex height list
    are computed once on demand and cached; all transforms return fresh
    words, so instances are safe to share between workers.
    """

    __slots__ = ("text", "_extremes", "_heights", "_stats")

    def __init__(self, text: str = ""):
        if not _UD.issuperset(text):
            bad = next(i for i, ch in enumerate(text) if ch not in _UD)
            raise InvalidCharacterError(text[bad], bad + 1)
        object.__setattr__(self, "text", text)
        object.__setattr__(self, "_extremes", None)
        object.__setattr__(self, "_heights", None)
        object.__setattr__(self, "_stats", None)

    def __setattr__(self, name, value):
        raise AttributeError("PathWord is immutable")

    # Internal caches bypass the immutability guard.
    def _cache(self, name, value):
        object.__setattr__(self, name, value)

    def __len__(self) -> int:
        return len(self.text)

    def __eq__(self, other) -> bool:
        if isinstance(other, PathWord):
            return self.text == other.text
        return NotImplemented

    def __hash__(self) -> int:
        return hash((PathWord, self.text))

    def __repr__(self) -> str:
        return f"PathWord({self.text!r})"

    def __str__(self) -> str:
        return self.text

    def __iter__(self):
        return (Step.UP if ch == "U" else Step.DOWN for ch in self.text)

    def __getitem__(self, index: int) -> Step:
        ch = self.text[index]
        return Step.UP if ch == "U" else Step.DOWN

    def serialize(self) -> str:
        """Canonical text form; the empty word serializes to ''."""
        return self.text

    @property
    def length(self) -> int:
        return len(self.text)

    def _ext(self) -> tuple[int, int, int]:
        ext = self._extremes
        if ext is None:
            ext = _extremes_of(self.text)
            self._cache("_extremes", ext)
        return ext

    @property
    def final_height(self) -> int:
        return self._ext()[0]

    @property
    def min_height(self) -> int:
        return self._ext()[1]

    @property
    def max_height(self) -> int:
        return self._ext()[2]

    def _height_list(self) -> list:
        heights = self._heights
        if heights is None:
            text = self.text
            if len(text) >= _LONG:
                arr = np.frombuffer(text.encode("ascii"), dtype=np.uint8)
                heights = np.cumsum(np.where(arr == 85, 1, -1)).tolist()
            else:
                heights = []
                h = 0
                for ch in text:
                    h = h + 1 if ch == "U" else h - 1
                    heights.append(h)
            self._cache("_heights", heights)
        return heights


def parse_word(text: str) -> PathWord:
    """Parse a word from text.

    Accepts 'U'/'D', the case-folded 'u'/'d', and '('/')' as aliases for
    up/down.  The empty string parses to the empty word.  Raises
    InvalidCharacterError (1-based position) on anything else.
    """
    canon = text.translate(_ALIAS_TABLE)
    return PathWord(canon)


def classify(w: PathWord) -> PathClass:
    """Classify a word; open words classify as NOT_CLOSED rather than erroring."""
    if not w.text:
        return PathClass.EMPTY
    final, lo, hi = w._ext()
    if final != 0:
        return PathClass.NOT_CLOSED
    if lo >= 0:
        return PathClass.DYCK
    if hi <= 0:
        return PathClass.NEGATIVE_DYCK
    return PathClass.BILATERAL_PROPER


def height_profile(w: PathWord) -> HeightProfile:
    """Vertex heights after each step (prefix sums of +-1)."""
    return list(w._height_list())


def step_height(w: PathWord, i: int) -> int:
    """Height of the 1-based i-th step.

    An up-step ending at height j and a down-step starting at height j are
    both at height j; equivalently the larger endpoint height of the step.
    O(1) after the word's height list has been built once.
    """
    if not 1 <= i <= len(w.text):
        raise IndexError(f"step index {i} out of range 1..{len(w.text)}")
    heights = w._height_list()
    before = heights[i - 2] if i >= 2 else 0
    after = heights[i - 1]
    return before if before > after else after


def reflect(w: PathWord) -> PathWord:
    """Flip every step (mirror in the horizontal axis); defined for any word."""
    return PathWord(w.text.translate(_FLIP_TABLE))


def _describe_dyck_violation(text: str) -> str:
    """Human-readable reason why text is not a Dyck word (1-based positions)."""
    h = 0
    for i, ch in enumerate(text, 1):
        h = h + 1 if ch == "U" else h - 1
        if h < 0:
            return f"vertex below axis at step {i}"
    return f"path ends at height {h} instead of 0"


def require_dyck(w: PathWord) -> None:
    """Raise NotADyckWordError unless the word is empty or a Dyck word."""
    cls = classify(w)
    if cls not in (PathClass.EMPTY, PathClass.DYCK):
        raise NotADyckWordError(
            f"not a Dyck word: {_describe_dyck_violation(w.text)}"
        )


def require_closed(w: PathWord) -> None:
    """Raise NotBilateralError unless the word ends at height 0."""
    if w.text and w.final_height != 0:
        raise NotBilateralError(
            f"not a bilateral Dyck word: path ends at height {w.final_height}"
        )
