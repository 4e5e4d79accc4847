"""How a reflected polynomial family settles onto its limit.

The bounded sums grow with their index N, and reflecting each one about
its degree produces polynomials whose low-order coefficients freeze as
N runs through a fixed residue class mod 3.  The driver below watches
that happen, then compares the frozen series with the conjectured
modulus-45 product.
"""
from qreflect import (MOD45_PRODUCTS, parse_product, rk_finite,
                      first_discrepancy, stabilized_limit)

ORDER = 24
FAMILY, CLASS = 4, 0

print(f"reflected family {FAMILY}, indices in class {CLASS} mod 3, "
      f"watched through q^{ORDER}")
print()
prev = None
for M in range(2, 9):
    member = rk_finite(FAMILY, 3 * M + CLASS, window=ORDER)
    row = " ".join(str(member.coefficient(k)) for k in range(ORDER + 1))
    marker = ""
    if prev is not None:
        d = first_discrepancy(prev, member, ORDER)
        marker = "  (all frozen)" if d is None else f"  (moves at q^{d})"
    print(f"  N={3 * M + CLASS:<3} {row}{marker}")
    prev = member
print()

series, used = stabilized_limit(
    lambda j: rk_finite(FAMILY, 3 * j + CLASS, window=ORDER), ORDER)
print(f"stabilized at index N={3 * used + CLASS}")

text = MOD45_PRODUCTS[(FAMILY, CLASS)]
product = parse_product(text).expand(ORDER)
print(f"conjectured product {text}")
print("first discrepancy against the product:",
      first_discrepancy(series, product, ORDER))
