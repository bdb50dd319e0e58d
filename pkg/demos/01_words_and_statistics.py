"""Tour of the core objects: parsing, classification, heights, statistics.

Run with the package importable (pip install -e . from the repo root, or
PYTHONPATH=src).
"""

from dyckmaps import (
    classify,
    height_profile,
    parse_word,
    render_ascii,
    stat_record,
    step_height,
)

# Words are step sequences: U goes up, D goes down.  The parser also accepts
# lowercase and parenthesis notation.
for raw in ["UUDD", "uudd", "(())"]:
    print(raw, "->", parse_word(raw).serialize())
print()

# Four kinds of balanced words (and the unbalanced leftovers).
for text in ["UUDD", "DDUU", "UDDU", "UDU", ""]:
    w = parse_word(text)
    print(f"{text or '(empty)':8s} {classify(w).value}")
print()

# Vertex heights and step heights.  A step's height is the larger of its two
# endpoint heights, so the first and last steps of any Dyck word sit at 1.
w = parse_word("UUDDUD")
print("word         ", w)
print("profile      ", height_profile(w))
print("step heights ", [step_height(w, i) for i in range(1, len(w) + 1)])
print()

# The full statistics bundle.
for text in ["UUDDUD", "UDDUUD", "DDUU"]:
    print(text, "->", stat_record(parse_word(text)).to_text())
print()

# And a picture.  The dashes mark the axis.
print(render_ascii(parse_word("UUDDUDDUUD")))
