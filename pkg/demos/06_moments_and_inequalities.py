#!/usr/bin/env python3
"""Moment bounds for uniform draws, and the workhorse inequalities.

For a family {U_i} of subsets of an n-element ground set and a uniform
m-element draw R, the first and second moments

    mu    = sum (m/n)^|U_i|
    Delta = sum over intersecting ordered pairs of (m/n)^|U_i union U_j|

control the probability that no U_i lands inside R, via
max(e^(-mu/2), e^(-mu^2/(2 Delta))).  The forbidden-pair graph on the top
half {n/2+1, ..., n} with edges {x, x+s} for s in a low set S is the
textbook family here: it has exactly sum (n/2 - s) edges and maximum
degree at most 2|S|, so fixing a low part prices the rest of the set.
"""

import math
import random

from sumfree import (
    build_pair_graph,
    check_binom_inequalities,
    check_gamma_sum,
    janson_quantities,
)

print(__doc__)

print("Pair graphs on the top half (n = 20):")
for s in ({8}, {1}, {2, 9}, {3, 5, 7}):
    g = build_pair_graph(20, s)
    expected = sum(20 // 2 - x for x in s)
    print(
        f"  S={sorted(s)!s:<12} edges={g.edge_count:>3} (= sum of 10-s: {expected:>3})"
        f"  max degree={g.max_degree} <= {2 * len(s)}"
    )

print()
print("Moments for the pair-graph family as the draw grows (n = 20, ground =")
print("its top half, family = edges of the S={2, 4} graph as vertex pairs):")
g = build_pair_graph(20, {2, 4})
family = [set(e) for e in g.edges]
for m in (2, 4, 6, 8):
    jq = janson_quantities(family, len(g.vertices), m)
    print(
        f"  draw {m}: mu={jq.mu.value():8.4f}  Delta={jq.delta.value():8.4f}"
        f"  avoidance factor <= {jq.bound.value():.4f}"
    )

print()
print("Binomial shift inequalities on random admissible tuples:")
rng = random.Random(0)
for _ in range(5):
    a = rng.randint(20, 400)
    b = rng.randint(2, a - 1)
    c = rng.randint(1, b - 1)
    d = rng.randint(0, b)
    checks = check_binom_inequalities(a, b, c, d)
    gaps = ", ".join(f"{chk.name} gap {chk.rhs.log - chk.lhs.log:6.2f}" for chk in checks)
    print(f"  (a,b,c,d)=({a},{b},{c},{d}): {gaps}")

print()
print("Tail sums sum j^a e^(-bj) against 2 Gamma(a+1) / b^(a+1):")
worst = (0.0, None)
for a in (1, 3, 6, 10):
    for b in (0.1, 0.5, 1.0, 2.5, 5.0):
        chk = check_gamma_sum(a, b)
        if chk.constant > worst[0]:
            worst = (chk.constant, (a, b))
print(f"  largest observed sum/Gamma ratio: {worst[0]:.4f} at (a, b) = {worst[1]}")
print(f"  e.g. a=1, b=1: sum = {check_gamma_sum(1, 1.0).tail_sum:.6f}"
      f" (closed form e/(e-1)^2 = {math.e / (math.e - 1) ** 2:.6f})")
