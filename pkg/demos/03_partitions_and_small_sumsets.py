#!/usr/bin/env python3
"""Partitions into distinct parts, with and without a sumset cap.

p(k) counts all partitions of k; p*(k, ell) counts the ell-element sets of
distinct positive integers summing to k.  The interesting refinement caps
the sumset: among all ell-sets with sum k, how many satisfy
|S + S| <= cap?  Arithmetic progressions minimize |S+S| at 2 ell - 1, so
tight caps isolate progression-like sets.  Closed-form ceilings of the
shape 2^ell * (2 c e k / 3 ell^2)^ell and 2^ell * ((4 lam - 3) e / 6)^ell
sit far above the exact counts at this scale.
"""

import math

from sumfree import LogValue, count_restricted, iter_distinct_sets, p, p_star, sumset, theorem_rhs

print(__doc__)

print(f"p(3) = {p(3)}   p(10) = {p(10)}   p(100) = {p(100)}")
print(f"p*(8, 3) = {p_star(8, 3)}   (8 = 5+2+1 = 4+3+1)")
print(f"p*(5, 3) = {p_star(5, 3)}   (5 below the staircase 1+2+3)")

print()
print("The exact asymptotic shape of p(k): ratio to e^(pi sqrt(2k/3))/(4k sqrt(3))")
for k in (50, 100, 200, 500):
    log_ratio = math.log(p(k)) + math.log(4 * k * math.sqrt(3)) - math.pi * math.sqrt(2 * k / 3)
    print(f"  k={k:3d}: ratio = {math.exp(log_ratio):.4f}")

print()
k, ell = 30, 4
print(f"All {p_star(k, ell)} sets with {ell} distinct parts summing to {k}, by |S+S|:")
for parts in iter_distinct_sets(k, ell):
    print(f"  {parts}  |S+S| = {len(sumset(parts))}")

print()
print(f"Capping the sumset (k={k}, ell={ell}):")
for cap in range(2 * ell - 1, 11):
    print(f"  |S+S| <= {cap:2d}: {count_restricted(k, ell, sumset_cap=cap)} sets")

print()
print("Counts versus the closed-form ceilings (slack exponent delta = 1):")
print(f"  {'k':>3} {'ell':>3} {'cap':>4} {'count':>6} {'ceiling':>12}")
for k, ell, lam in ((40, 5, 2), (60, 6, 2.5), (84, 8, 3)):
    cap = int(lam * ell)
    count = count_restricted(k, ell, sumset_cap=cap)
    rhs = theorem_rhs("S+S2", ell=ell, lam=lam, delta=1)
    print(f"  {k:>3} {ell:>3} {cap:>4} {count:>6} {math.exp(rhs.log):>12.1f}")
for k, ell, c in ((40, 5, 2), (60, 6, 2.5), (84, 8, 3)):
    cap = int(c * k / ell)
    count = count_restricted(k, ell, sumset_cap=cap)
    rhs = theorem_rhs("S+S", k=k, ell=ell, c=c, delta=1)
    print(f"  {k:>3} {ell:>3} {cap:>4} {count:>6} {math.exp(rhs.log):>12.1f}")

print()
print("The per-part bound (e^2 k / ell^2)^ell dominates p*(k, ell) everywhere:")
worst = (None, -math.inf)
for ell in range(1, 13):
    for k in range(ell * (ell + 1) // 2, 121):
        gap = LogValue.of(p_star(k, ell)).log - theorem_rhs("parts", k=k, ell=ell).log
        if gap > worst[1]:
            worst = ((k, ell), gap)
print(f"  tightest cell (k, ell) = {worst[0]}: count/bound = {math.exp(worst[1]):.4f}")
