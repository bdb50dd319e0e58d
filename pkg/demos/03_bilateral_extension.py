"""Extending the bijection below the axis.

Two involutions do the heavy lifting: alpha reflects a word in the axis,
beta swaps the two halves of the first-return factorization.  A balanced
word is cut at its crossings into alternating positive and negative
factors, positive factors go through phi, negative ones through the
conjugation alpha o phi o beta o alpha.
"""

from dyckmaps import (
    alpha,
    beta,
    crossing_factorize,
    parse_word,
    peaks,
    phi_ext,
    psi_ext,
    render_ascii,
    ups_at_odd_height,
)

# alpha: reflection.  beta: first-return swap (it moves one up-step between
# odd and even height, which is exactly what the negative case needs).
w = parse_word("UUDD")
print("alpha:", w, "->", alpha(w))
print("beta :", w, "->", beta(w))
print("beta is an involution:", beta(beta(w)) == w)
print()

# A word with crossings factors into same-sign runs.
w = parse_word("UDDUUDDU")
print("word   :", w)
print("factors:", " | ".join(f.text for f in crossing_factorize(w).factors))
print(render_ascii(w))
print()

# The extended map keeps every factor's length and side of the axis, and
# still exchanges odd-height up-steps with peaks.
for text in ["DDUU", "UDDU", "DUDUUD", "UUDDDUUDUDDU"]:
    w = parse_word(text)
    image = phi_ext(w)
    back = psi_ext(image)
    print(f"{text:14s} -> {image.text:14s}  ups_odd {ups_at_odd_height(w)} "
          f"-> peaks {peaks(image)}   inverted: {back == w}")
