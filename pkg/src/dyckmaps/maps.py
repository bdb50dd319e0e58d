"""The six length-preserving maps on step words.

phi / psi     inverse bijections on Dyck words exchanging the number of
              up-steps at odd height with the number of peaks, while
              preserving semilength and the number of contacts;
alpha         reflection in the axis (an involution);
beta          first-return swap U W1 D W2 -> U W2 D W1 (an involution that
              shifts up-steps between odd and even heights);
phi_ext /     extensions of phi / psi to all balanced words, factor by
psi_ext       factor across crossings, exchanging odd-height up-steps with
              peaks on the whole bilateral class.

phi and psi are implemented as single left-to-right stack transducers, so
cost is O(length) with no recursion; words of millions of steps and height
in the hundreds of thousands are fine.  psi runs the mirrored transducer on
the reversed-and-flipped word (the two parses are mirror images of each
other).
"""

from __future__ import annotations

from .decompose import (
    _crossing_factors,
    _first_return_len,
    _phi_parse_text,
    _psi_parse_text,
    phi_bracketing,
    psi_bracketing,
)
from .words import PathWord, require_closed, require_dyck

_U, _D = 85, 68  # ord('U'), ord('D'); the cores run on ASCII bytes
_FLIP_B = bytes.maketrans(b"UD", b"DU")
_FLIP_STR = str.maketrans("UD", "DU")


def _phi_b(data: bytes) -> bytes:
    """Rewrite U (U W_1 D)...(U W_s D) D T  ->  (U W_1')...(U W_s') UD D^s T',
    applied to every nesting level in one pass.

    Stack frames: an int >= 0 counts the blocks of an open node, -1 marks an
    open block.  A 'U' under a node opens a block (emitted), a 'U' under a
    block opens a node (deferred); closing a node emits its relocated
    UD D^s group, closing a block emits nothing.  Output goes into a
    preallocated buffer (the map preserves length), so cost is O(length).
    """
    out = bytearray(len(data))
    pos = 0
    stack = []
    push = stack.append
    pop = stack.pop
    for ch in data:
        if ch == _U:
            if stack and stack[-1] >= 0:
                stack[-1] += 1
                out[pos] = _U
                pos += 1
                push(-1)
            else:
                push(0)
        else:
            s = pop()
            if s >= 0:
                out[pos] = _U
                out[pos + 1] = _D
                pos += 2
                if s:
                    end = pos + s
                    out[pos:end] = b"D" * s
                    pos = end
    return bytes(out)


def _psi_mirror_b(data: bytes) -> bytes:
    """Mirror-image transducer inverting _phi_b.

    On the reversed/flipped word each prime factor starts with a maximal
    U-run of length s+1; the run collapses to the anchor peak and the s
    level-closing D's fan back out around the inner factors.
    """
    out = bytearray(len(data))
    pos = 0
    stack = []
    i = 0
    n = len(data)
    while i < n:
        if data[i] == _U:
            j = i + 1
            while data[j] == _U:
                j += 1
            s = j - i - 1
            out[pos] = _U
            if s:
                out[pos + 1] = _U
                stack.append(s)
            else:
                out[pos + 1] = _D
            pos += 2
            i = j + 1
        else:
            k = stack[-1] - 1
            out[pos] = _D
            if k:
                stack[-1] = k
                out[pos + 1] = _U
            else:
                stack.pop()
                out[pos + 1] = _D
            pos += 2
            i += 1
    return bytes(out)


def _psi_b(data: bytes) -> bytes:
    mirrored = data.translate(_FLIP_B)[::-1]
    return _psi_mirror_b(mirrored).translate(_FLIP_B)[::-1]


def _beta_b(data: bytes) -> bytes:
    r = _first_return_len(data)
    return b"U" + data[r:] + b"D" + data[1 : r - 1]


def _phi_ext_b(data: bytes) -> bytes:
    if not data:
        return b""
    parts = []
    for a, b, negative in _crossing_factors(data):
        seg = data[a:b]
        if negative:
            parts.append(_phi_b(_beta_b(seg.translate(_FLIP_B))).translate(_FLIP_B))
        else:
            parts.append(_phi_b(seg))
    return b"".join(parts)


def _psi_ext_b(data: bytes) -> bytes:
    if not data:
        return b""
    parts = []
    for a, b, negative in _crossing_factors(data):
        seg = data[a:b]
        if negative:
            parts.append(_beta_b(_psi_b(seg.translate(_FLIP_B))).translate(_FLIP_B))
        else:
            parts.append(_psi_b(seg))
    return b"".join(parts)


# str-level wrappers used by the verification engine and the public maps

def _phi_text(text: str) -> str:
    return _phi_b(text.encode("ascii")).decode("ascii")


def _psi_text(text: str) -> str:
    return _psi_b(text.encode("ascii")).decode("ascii")


def _alpha_text(text: str) -> str:
    return text.translate(_FLIP_STR)


def _beta_text(text: str) -> str:
    return _beta_b(text.encode("ascii")).decode("ascii")


def _phi_ext_text(text: str) -> str:
    return _phi_ext_b(text.encode("ascii")).decode("ascii")


def _psi_ext_text(text: str) -> str:
    return _psi_ext_b(text.encode("ascii")).decode("ascii")


def phi(w: PathWord) -> PathWord:
    """Dyck bijection sending k up-steps at odd height to k peaks.

    Preserves semilength and the number of contacts; phi(empty) = empty.
    Inverse of :func:`psi`.
    """
    require_dyck(w)
    return PathWord(_phi_text(w.text))


def psi(w: PathWord) -> PathWord:
    """Inverse of :func:`phi`; sends k peaks to k up-steps at odd height."""
    require_dyck(w)
    return PathWord(_psi_text(w.text))


def alpha(w: PathWord) -> PathWord:
    """Reflect a balanced word in the axis; an involution.

    Swaps peaks with valleys and steps at odd height with steps at even
    height (an up-step at height j maps to a down-step at height 1-j).
    """
    require_closed(w)
    return PathWord(_alpha_text(w.text))


def beta(w: PathWord) -> PathWord:
    """First-return swap U W1 D W2 -> U W2 D W1 on Dyck words; an involution.

    Away from the outermost U...D pair it exchanges odd and even step
    heights, so a word with k up-steps at odd height maps to one with k-1
    up-steps at even height.  It does not preserve the number of contacts.
    Extended by beta(empty) = empty to make the map total.
    """
    require_dyck(w)
    if not w.text:
        return w
    return PathWord(_beta_text(w.text))


def phi_ext(w: PathWord) -> PathWord:
    """Extension of phi to all balanced words.

    Dyck words map through phi; negative words through the conjugation
    alpha o phi o beta o alpha; anything else is cut at its crossings and
    mapped factor by factor.  Sends k up-steps at odd height to k peaks and
    preserves length, crossings, and each factor's class.
    """
    require_closed(w)
    return PathWord(_phi_ext_text(w.text))


def psi_ext(w: PathWord) -> PathWord:
    """Inverse of :func:`phi_ext` (negative factors use alpha o beta o psi o alpha)."""
    require_closed(w)
    return PathWord(_psi_ext_text(w.text))


# --- staged (traced) evaluation ------------------------------------------
#
# Breadth-first evaluation of phi / psi producing one display line per
# rewriting round.  Pending subwords are shown in parentheses with their
# full parse bracketing; every rewritten region keeps an enclosing pair of
# display-only parentheses, and empty subwords print as "()" so their
# positions stay visible.  The frontier is kept flat (group parentheses are
# mark tokens, excluded from the final word), so no recursion is involved.

_PEND = 0
_LIT = 1
_MARK = 2


def _stages(w: PathWord, rewrite, bracket) -> tuple[PathWord, list]:
    lines = [bracket(w)]
    frontier = [(_PEND, w.text)]
    top_level = True
    while True:
        nxt = []
        for kind, payload in frontier:
            if kind != _PEND:
                nxt.append((kind, payload))
                continue
            body = rewrite(payload)
            if top_level:
                nxt.extend(body)
            else:
                nxt.append((_MARK, "("))
                nxt.extend(body)
                nxt.append((_MARK, ")"))
        top_level = False
        frontier = nxt
        pending = [p for k, p in frontier if k == _PEND]
        lines.append(
            "".join(
                "(" + bracket(PathWord(payload)) + ")"
                if kind == _PEND
                else payload
                for kind, payload in frontier
            )
        )
        if not pending:
            break
    result = PathWord("".join(p for k, p in frontier if k == _LIT))
    return result, lines


def _phi_rewrite(text: str) -> list:
    if not text:
        return []
    inner, tail = _phi_parse_text(text)
    body = []
    for sub in inner:
        body.append((_LIT, "U"))
        body.append((_PEND, sub))
    body.append((_LIT, "UD" + "D" * len(inner)))
    body.append((_PEND, tail))
    return body


def _psi_rewrite(text: str) -> list:
    if not text:
        return []
    inner, tail = _psi_parse_text(text)
    body = [(_LIT, "U")]
    for sub in inner:
        body.append((_LIT, "U"))
        body.append((_PEND, sub))
        body.append((_LIT, "D"))
    body.append((_LIT, "D"))
    body.append((_PEND, tail))
    return body


def phi_stages(w: PathWord) -> tuple[PathWord, list]:
    """Apply phi one rewriting round at a time.

    Returns (phi(w), lines): line 0 is the input's bracketed parse, each
    further line shows the word after one more round, the last line with no
    pending subwords left.
    """
    require_dyck(w)
    return _stages(w, _phi_rewrite, phi_bracketing)


def psi_stages(w: PathWord) -> tuple[PathWord, list]:
    """Apply psi one rewriting round at a time; see :func:`phi_stages`."""
    require_dyck(w)
    return _stages(w, _psi_rewrite, psi_bracketing)
