"""The bijection phi on Dyck words and its inverse psi.

phi turns a word with k up-steps at odd height into a word with k peaks,
keeping the semilength and the number of contacts.  psi undoes it exactly.
The staged output below shows one line per rewriting round, with every
still-to-be-processed subword in parentheses ("()" is an empty one).
"""

from dyckmaps import (
    contacts,
    parse_word,
    peaks,
    phi,
    phi_stages,
    psi,
    psi_stages,
    render_ascii,
    ups_at_odd_height,
)

w = parse_word("UUUUDDDUUUUDDUDDDD")
image = phi(w)

print("input :", w, f"(ups at odd height: {ups_at_odd_height(w)},",
      f"contacts: {contacts(w)})")
print(render_ascii(w))
print()
print("output:", image, f"(peaks: {peaks(image)}, contacts: {contacts(image)})")
print(render_ascii(image))
print()

print("forward, stage by stage:")
_, lines = phi_stages(w)
for line in lines:
    print("  ", line)
print()

print("backward, stage by stage:")
result, lines = psi_stages(image)
for line in lines:
    print("  ", line)
assert result == w
print()

# The exchange of statistics, word by word, over a whole class.
from dyckmaps import generate_dyck

print("semilength 4, every word:   ups_odd -> peaks of the image")
for word in generate_dyck(4):
    mapped = phi(word)
    assert psi(mapped) == word
    print(f"  {word}  {ups_at_odd_height(word)} -> {peaks(mapped)}   {mapped}")
