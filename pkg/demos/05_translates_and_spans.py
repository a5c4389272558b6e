#!/usr/bin/env python3
"""Which translates of S land inside S + S?

Write B(S, delta) for the set of integers y whose translate S + y escapes
S + S in at most delta*|S| elements.  Counting pairs (a, b) in S x (S+S)
with a + y = b shows |B| <= |S+S| / (1 - delta), and the span identity
span(S+S) = 2 span(S) pins the window where any qualifying y can live.
B inherits the gross structure of S: for an interval it is an interval,
for a two-block set it splits into two blocks one gap apart.
"""

import random
from fractions import Fraction

from sumfree import b_set, span, sumset

print(__doc__)

print("Span identity on random sets:")
rng = random.Random(1)
for _ in range(4):
    s = sorted(rng.sample(range(1, 60), 6))
    print(f"  span({s}) = {span(s)},  span(S+S) = {span(sumset(s))}")

print()
print("Exact translate sets at delta = 0 (y with S + y inside S + S):")
for s in ({1, 2, 3}, {5}, {2, 4, 6}, {1, 2, 4, 8}):
    print(f"  S={sorted(s)!s:<15} S+S size {len(sumset(s)):>2}  B(S, 0) = {b_set(s, 0)}")

print()
print("The pair-count ceiling |S+S|/(1-delta) across shapes (|S| = 24):")


def blocks(values):
    values = sorted(values)
    out, start, prev = [], values[0], values[0]
    for v in values[1:]:
        if v > prev + 1:
            out.append((start, prev))
            start = v
        prev = v
    out.append((start, prev))
    return out


interval = list(range(50, 74))
two_block = list(range(50, 62)) + list(range(450, 462))
spread = sorted(random.Random(9).sample(range(1, 2000), 24))
for name, s in (("interval", interval), ("two blocks", two_block), ("spread", spread)):
    ss = len(sumset(s))
    for d in (Fraction(0), Fraction(1, 4)):
        bs = b_set(s, d)
        ceiling = float(Fraction(ss) / (1 - d))
        print(f"  {name:<10} delta={str(d):<4} |B|={len(bs):>3}  ceiling={ceiling:7.1f}")
    if name != "spread":
        print(f"  {'':<10} B blocks at delta=1/4: {blocks(b_set(s, Fraction(1, 4)))}")

print()
print("An interval saturates about (1 + 2 delta)/2 of its |S+S| ceiling")
print("(every y from min(S) - delta|S| to max(S) + delta|S| qualifies);")
print("spread sets sit near the floor |B| = |S| of exact translates.")
