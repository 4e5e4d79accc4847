"""Expanding modular products and reading them as partition counts.

Every infinite product handled here is a quotient of q-Pochhammer
symbols.  A product with all factors downstairs generates partitions
whose parts live in the listed residue classes, so the coefficients
are ordinary counting numbers and can be checked by brute force.
"""
from qreflect import GAP23, count_partitions, parse_product

ORDER = 20

# parts congruent to 2, 3, 5, 8 modulo 9
spec = parse_product("1/(q^2,q^3,q^5,q^8;q^9)")
series = spec.expand(ORDER)

print(f"{spec.text}  expanded through q^{ORDER}:")
print(" ", " ".join(str(series.coefficient(k)) for k in range(ORDER + 1)))
print()

# the same numbers, counted directly: partitions with smallest part >= 2,
# gap >= 3 at distance two, and neighbouring parts differing by at most 1
# only when their sum is 2 mod 3
print("partition counts under the gap profile (parts capped generously):")
counts = [count_partitions(GAP23, n, ORDER) for n in range(ORDER + 1)]
print(" ", " ".join(str(c) for c in counts))
print()
match = all(series.coefficient(n) == counts[n] for n in range(ORDER + 1))
print("agree on the full window:", match)
print()

# the bracket shorthand br(c1,c2,c3,c4) abbreviates a level-45 quotient
b = parse_product("br(2,8,11,20)")
print(f"{b.text} starts:")
bs = b.expand(12)
for k in range(13):
    print(f"  q^{k:<3} {bs.coefficient(k)}")
