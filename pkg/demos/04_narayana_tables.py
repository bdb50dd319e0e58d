"""Exact enumeration and the Narayana distribution.

Counting Dyck words of semilength n by peaks gives the Narayana numbers
N(n, k) = C(n, k) C(n, k-1) / n; counting by up-steps at odd height gives
the same table, which is what the bijection demonstrates word by word.
"""

from dyckmaps import (
    catalan,
    central_binomial,
    distribution,
    generate_dyck,
    narayana,
)

print("the five Dyck words of semilength 3, in generation order:")
for w in generate_dyck(3):
    print("  ", w)
print()

print("n | Narayana row                    | row sum | Catalan")
for n in range(1, 9):
    row = [narayana(n, k) for k in range(1, n + 1)]
    print(f"{n} | {str(row):31s} | {sum(row):7d} | {catalan(n)}")
print()

# Brute-force tables agree with the formula.
for stat in ("peaks", "ups_odd"):
    table = distribution("dyck", 6, stat)
    assert table.counts == {k: narayana(6, k) for k in range(1, 7)}
    print(f"distribution of {stat} at n=6:", table.counts)
print()

# The bilateral class is counted by central binomials, and peaks and
# odd-height up-steps are equidistributed there too.
for n in range(1, 7):
    by_peaks = distribution("bilateral", n, "peaks")
    by_ups = distribution("bilateral", n, "ups_odd")
    assert by_peaks.counts == by_ups.counts
    assert by_peaks.total == central_binomial(n)
print("bilateral peak distribution, n=4:")
print(distribution("bilateral", 4, "peaks").to_csv())
