"""Growing constrained partitions from minimal configurations.

Partitions under the gap profile split into m singleton parts and n
adjacent pairs.  Each (m, n) shape has a unique smallest partition,
and every other admissible partition of that shape is reached by
pushing pairs and singletons upward, three units of size per pair
move, one per singleton step.  This is the combinatorial engine
behind the fourth bounded sum.
"""
from qreflect import (GAP23, enumerate_partitions, generate_by_motions,
                      kr_finite, minimal_configuration)

MAX_PART = 7

print("minimal configurations:")
for m in range(3):
    for n in range(3):
        parts = minimal_configuration(m, n)
        print(f"  m={m} n={n}: {parts or '(empty)'}  size {sum(parts)}")
print()

print(f"everything reachable with parts <= {MAX_PART}:")
reached = {}
for m in range(MAX_PART + 2):
    for n in range(MAX_PART // 2 + 2):
        grown = generate_by_motions(m, n, MAX_PART)
        for lam in grown:
            reached.setdefault(sum(lam), set()).add(lam)
        if grown != {()}:
            print(f"  m={m} n={n}: {len(grown)} partitions")
print()

print("cross-check against direct enumeration and the bounded sum:")
series = kr_finite(4, MAX_PART)
ok = True
for total in sorted(reached):
    direct = set(enumerate_partitions(GAP23, total, MAX_PART))
    coeff = series.coefficient(total)
    status = "ok" if reached[total] == direct and coeff == len(direct) \
        else "MISMATCH"
    ok = ok and status == "ok"
    print(f"  size {total:>2}: motions {len(reached[total]):>2}  "
          f"search {len(direct):>2}  coefficient {coeff:>2}  {status}")
print()
print("three-way agreement:", ok)
