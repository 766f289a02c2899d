"""The multiple cyclic exchange: shift a subset around a cycle of bases.

Given bases B_1..B_k and any A_1 inside B_1, there are subsets A_i of B_i
such that every (B_i \\ A_i) u A_{i-1} is again a basis.  The construction
lifts the bases to disjoint parallel copies, restricts the lifted matroid
to one class per part, and partitions the copies; the A_i fall out of the
partition.

Run with:  python3 demos/03_cyclic_exchange.py
"""

from matrex import (
    ExchangeInstance,
    GraphicMatroid,
    brute_force_cyclic_exchange,
    build_color_classes,
    canon,
    cyclic_exchange,
    multiple_symmetric_exchange,
)

k4 = GraphicMatroid(4, [[0, 1], [1, 2], [2, 3], [0, 2], [1, 3], [0, 3]])

# Two disjoint spanning trees of K_4; move edge 0 out of the first.
b1, b2 = frozenset({0, 1, 2}), frozenset({3, 4, 5})
instance = ExchangeInstance(k4, (b1, b2), frozenset({0}))
result = cyclic_exchange(instance)
print("k=2 on K_4, shifting edge 0 out of", canon(b1))
print("  exchange sets:", [canon(p) for p in result.parts])
print("  shifted bases:", [canon(s) for s in result.shifted])

# For this instance the answer is forced: the brute-force oracle enumerates
# every candidate A_2 and finds exactly one that works.
solutions = brute_force_cyclic_exchange(instance)
print("  oracle says the valid A_2 choices are:",
      [[canon(a) for a in sol] for sol in solutions])

# k=2 is the classical two-basis subset exchange:
a2 = multiple_symmetric_exchange(k4, b1, b2, {0})
print("  symmetric exchange returns A_2 =", canon(a2))

# A three-basis cycle with overlapping bases.  The lift to parallel copies
# is what lets the same edge sit in several bases at once.
b3 = frozenset({0, 2, 4})
instance = ExchangeInstance(k4, (b1, b3, b2), frozenset({0, 1}))
result = cyclic_exchange(instance)
print("\nk=3 on K_4 with overlapping bases, |A_1| = 2:")
for i, (part, shifted) in enumerate(zip(result.parts, result.shifted)):
    print(f"  A_{i + 1} = {canon(part)},  shifted basis {i + 1}: {canon(shifted)}")

# A peek at the construction itself: each lifted slot carries the list of
# parts it may join, and class j collects the slots allowed in part j.
classes = build_color_classes(instance)
print("\nslot lists of the lift (slot -> allowed parts):")
for slot, (tag, element) in enumerate(classes.lifted.slots):
    allowed = canon(j + 1 for j in classes.lists[slot])
    print(f"  slot {slot} = copy of edge {element} from basis {tag + 1}: parts {allowed}")
