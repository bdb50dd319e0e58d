"""The word factorizations the bijections are built on.

Three unique factorizations are provided:

* the block parse of a nonempty Dyck word
      W = U (U W_1 D)(U W_2 D)...(U W_s D) D T
  where the outer U...D pair is the first return to the axis, the s blocks
  are the first-return factors of its interior, and T is the remainder;

* the spine parse of a nonempty Dyck word
      W = (U W_1)(U W_2)...(U W_s) U D^{s+1} T
  where Q = W up to its first return is cut at its trailing descent: the
  descent has length s+1 (equivalently, Q's rightmost peak sits at height
  s+1), the U before it is the anchor, and the i-th spine U is the last
  rise from height i-1 to i inside Q;

* the crossing factorization of a balanced word into maximal runs of
  same-sign excursions, whose factors alternate between nonempty Dyck
  words and negative Dyck words.

Note on the spine parse: anchoring on the rightmost peak of the whole word
would be ambiguous (UUDDUD has its global rightmost peak at height 1 but
spine length 2); the first-return prefix is the reading under which the two
parses invert each other.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import EmptyWordError, NotADyckWordError, NotBilateralError
from .words import PathWord, require_dyck


_UP = 85  # ord('U'); the factorization cores work on ASCII bytes


def _first_return_len(data) -> int:
    """Length of the prefix of a nonempty Dyck word ending at its first return.

    Accepts str or bytes; indices coincide since the alphabet is ASCII.
    """
    if isinstance(data, str):
        data = data.encode("ascii")
    h = 0
    for i, ch in enumerate(data, 1):
        h = h + 1 if ch == _UP else h - 1
        if not h:
            return i
    raise NotADyckWordError("word never returns to the axis")


def _check_nonempty_dyck(w: PathWord) -> None:
    if not w.text:
        raise EmptyWordError("the empty word has no factorization")
    require_dyck(w)


@dataclass(frozen=True)
class PhiDecomposition:
    """Block parse (s inner Dyck words and a tail Dyck word)."""

    inner: tuple[PathWord, ...]
    tail: PathWord

    @property
    def s(self) -> int:
        return len(self.inner)

    def recompose(self) -> PathWord:
        blocks = "".join("U" + w.text + "D" for w in self.inner)
        return PathWord("U" + blocks + "D" + self.tail.text)


@dataclass(frozen=True)
class PsiDecomposition:
    """Spine parse (s inner Dyck words, an anchor peak, and a tail)."""

    inner: tuple[PathWord, ...]
    tail: PathWord

    @property
    def s(self) -> int:
        return len(self.inner)

    def recompose(self) -> PathWord:
        spine = "".join("U" + w.text for w in self.inner)
        return PathWord(spine + "U" + "D" * (self.s + 1) + self.tail.text)


@dataclass(frozen=True)
class CrossingFactorization:
    """Alternating Dyck / negative Dyck factors; one more factor than crossings."""

    factors: tuple[PathWord, ...]

    @property
    def crossings(self) -> int:
        return max(len(self.factors) - 1, 0)

    def recompose(self) -> PathWord:
        return PathWord("".join(f.text for f in self.factors))


def first_return_split(w: PathWord) -> tuple[PathWord, PathWord]:
    """Split a nonempty Dyck word at its first return to the axis.

    Returns (head, rest) with head prime (exactly one contact) and
    head + rest == w.
    """
    _check_nonempty_dyck(w)
    r = _first_return_len(w.text)
    return PathWord(w.text[:r]), PathWord(w.text[r:])


def _phi_parse_text(text: str) -> tuple[list, str]:
    """Block parse of a nonempty Dyck word; returns (inner texts, tail text)."""
    r = _first_return_len(text)
    interior, tail = text[1 : r - 1], text[r:]
    inner = []
    h = 0
    start = 0
    for i, ch in enumerate(interior, 1):
        h = h + 1 if ch == "U" else h - 1
        if not h:
            inner.append(interior[start + 1 : i - 1])
            start = i
    return inner, tail


def phi_parse(w: PathWord) -> PhiDecomposition:
    """Block parse of a nonempty Dyck word.

    The number of blocks s equals the number of down-steps at height 2
    before the first contact.
    """
    _check_nonempty_dyck(w)
    inner, tail = _phi_parse_text(w.text)
    return PhiDecomposition(tuple(PathWord(t) for t in inner), PathWord(tail))


def _psi_parse_text(text: str) -> tuple[list, str]:
    """Spine parse of a nonempty Dyck word; returns (inner texts, tail text)."""
    r = _first_return_len(text)
    q, tail = text[:r], text[r:]
    stripped = q.rstrip("D")
    s = len(q) - len(stripped) - 1
    body = q[: len(stripped) - 1]  # drop the anchor U as well
    if not s:
        return [], tail
    # Last rise to each spine level 1..s; later rises overwrite earlier ones.
    last_rise = [0] * (s + 1)
    h = 0
    for idx, ch in enumerate(body):
        if ch == "U":
            h += 1
            if h <= s:
                last_rise[h] = idx
        else:
            h -= 1
    cuts = last_rise[1:] + [len(body)]
    inner = [body[cuts[i] + 1 : cuts[i + 1]] for i in range(s)]
    return inner, tail


def psi_parse(w: PathWord) -> PsiDecomposition:
    """Spine parse of a nonempty Dyck word.

    s + 1 equals the height of the rightmost peak of the word's
    first-return prefix (the length of that prefix's trailing descent).
    """
    _check_nonempty_dyck(w)
    inner, tail = _psi_parse_text(w.text)
    return PsiDecomposition(tuple(PathWord(t) for t in inner), PathWord(tail))


def _crossing_factors(data: bytes) -> list:
    """Factor boundaries as (start, end, is_negative), in word order."""
    factors = []
    h = 0
    fact_start = 0
    fact_neg = None
    exc_start = 0
    for i, ch in enumerate(data):
        h = h + 1 if ch == _UP else h - 1
        if not h:
            neg = data[exc_start] != _UP
            if fact_neg is None:
                fact_neg = neg
            elif neg != fact_neg:
                factors.append((fact_start, exc_start, fact_neg))
                fact_start = exc_start
                fact_neg = neg
            exc_start = i + 1
    if fact_start < len(data):
        factors.append((fact_start, len(data), fact_neg))
    return factors


def crossing_factorize(w: PathWord) -> CrossingFactorization:
    """Cut a balanced word at every axis vertex where the excursion sign flips.

    Factors are maximal runs of same-sign excursions; they alternate between
    nonempty Dyck words and negative Dyck words, and there is exactly one
    more factor than the word has crossings.  The empty word has no factors.
    """
    if w.text and w.final_height != 0:
        raise NotBilateralError("crossing factorization requires a balanced word")
    parts = _crossing_factors(w.text.encode("ascii"))
    return CrossingFactorization(
        tuple(PathWord(w.text[a:b]) for a, b, _ in parts)
    )


# --- bracketing renderers ------------------------------------------------
#
# Textual forms of the two parses, applied recursively: block arguments are
# wrapped in parentheses (an empty argument prints as "()"), tails print
# inline.  Both renderers are single-pass stack machines, so arbitrarily
# deep words are fine.

_BRACKET_MIRROR = str.maketrans("UD()", "DU)(")


def phi_bracketing(w: PathWord) -> str:
    """Fully bracketed form of a Dyck word under the block parse."""
    require_dyck(w)
    out = []
    emit = out.append
    stack = []
    for ch in w.text:
        if ch == "U":
            if stack and stack[-1]:
                emit("U(")
                stack.append(False)  # block frame
            else:
                emit("U")
                stack.append(True)  # node frame
        else:
            if stack.pop():
                emit("D")
            else:
                emit(")D")
    return "".join(out)


def psi_bracketing(w: PathWord) -> str:
    """Fully bracketed form of a Dyck word under the spine parse."""
    require_dyck(w)
    mirrored = w.text.translate(_BRACKET_MIRROR)[::-1]
    out = []
    emit = out.append
    stack = []
    i = 0
    n = len(mirrored)
    while i < n:
        if mirrored[i] == "U":
            j = i + 1
            while mirrored[j] == "U":
                j += 1
            s = j - i - 1
            emit("U" * (s + 1))
            emit("D")
            if s:
                emit("(")
                stack.append(s)
            i = j + 1
        else:
            k = stack[-1] - 1
            if k:
                stack[-1] = k
                emit(")D(")
            else:
                stack.pop()
                emit(")D")
            i += 1
    return "".join(out).translate(_BRACKET_MIRROR)[::-1]
