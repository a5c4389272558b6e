"""Exact partition counting, with and without sumset-size constraints.

p(k) is the number of integer partitions of k (p(3) = 3: 3, 2+1, 1+1+1).
p_star(k, ell) counts partitions of k into ell distinct parts, equivalently
the ell-element sets of positive integers with element sum k; it satisfies
the recurrence p*(k, ell) = p*(k - ell, ell - 1) + p*(k - ell, ell)
(subtract one from every part; the smallest part either was 1 and vanishes
or stays positive) and vanishes when k < ell(ell+1)/2.

The restricted counters answer "how many of those sets also have a small
sumset".  No closed form is known, so they enumerate the candidate sets
down a descending-largest-part tree with sum/size pruning and filter by
the exact |S+S| of each candidate.  Enumeration is refused (BudgetError)
when the candidate count exceeds the configured budget; results are exact
integers, never truncated.
"""

from __future__ import annotations

from collections import Counter
from math import comb
from typing import Iterator, Optional

from .errors import BudgetError
from .intset import bits_of
from .sumsets import sumsetbits

DEFAULT_BUDGET = 10**7

_p_cache: list[int] = [1]


def p(k: int) -> int:
    """Number of integer partitions of k (exact)."""
    if k < 0:
        raise ValueError("k must be >= 0")
    if k >= len(_p_cache):
        _grow_p_cache(max(k, 2 * len(_p_cache)))
    return _p_cache[k]


def _grow_p_cache(kmax: int) -> None:
    table = [1] + [0] * kmax
    for part in range(1, kmax + 1):
        for s in range(part, kmax + 1):
            table[s] += table[s - part]
    _p_cache[:] = table


def p_star(k: int, ell: int) -> int:
    """Number of ell-element sets of distinct positive integers summing to k."""
    if k < 0 or ell < 0:
        raise ValueError("k and ell must be >= 0")
    if ell == 0:
        return 1 if k == 0 else 0
    if k < ell * (ell + 1) // 2:
        return 0
    prev = [0] * (k + 1)
    prev[0] = 1
    for j in range(1, ell + 1):
        cur = [0] * (k + 1)
        for s in range(j * (j + 1) // 2, k + 1):
            cur[s] = prev[s - j] + cur[s - j]
        prev = cur
    return prev[k]


def iter_distinct_sets(k: int, ell: int, max_part: Optional[int] = None) -> Iterator[tuple[int, ...]]:
    """Yield every ell-element set with distinct parts summing to k, ascending tuples.

    Parts are bounded by max_part when given.  The tree branches on the
    largest part in descending order and prunes branches whose remaining
    sum is infeasible for the remaining number of parts.
    """
    if k < 0 or ell < 0:
        raise ValueError("k and ell must be >= 0")
    cap = k if max_part is None else min(max_part, k)
    yield from _distinct_rec(k, ell, cap)


def _distinct_rec(k: int, ell: int, cap: int) -> Iterator[tuple[int, ...]]:
    if ell == 0:
        if k == 0:
            yield ()
        return
    # largest part a: the other ell-1 parts are distinct, positive, below a
    hi = min(cap, k - ell * (ell - 1) // 2)
    lo = -(-(2 * k + ell * (ell - 1)) // (2 * ell))  # ceil(k/ell + (ell-1)/2)
    for a in range(hi, max(lo, ell) - 1, -1):
        for rest in _distinct_rec(k - a, ell - 1, a - 1):
            yield rest + (a,)


def sumset_size_profile(
    k: int, ell: int, max_part: Optional[int] = None, budget: int = DEFAULT_BUDGET
) -> Counter:
    """Histogram {|S+S|: count} over all ell-element sets summing to k.

    One enumeration pass answers every sumset-cap query for this (k, ell)
    via a cumulative sum of the histogram.
    """
    _check_budget(k, ell, budget)
    profile: Counter = Counter()
    for parts in iter_distinct_sets(k, ell, max_part):
        profile[sumsetbits(bits_of(parts)).bit_count()] += 1
    return profile


def count_restricted(
    k: int,
    ell: int,
    sumset_cap: Optional[int] = None,
    universe_cap: Optional[int] = None,
    budget: int = DEFAULT_BUDGET,
) -> int:
    """Exact number of ell-element sets summing to k with |S+S| <= sumset_cap.

    Parts are additionally bounded by universe_cap when given.  Without any
    constraint the count equals p_star(k, ell).
    """
    if sumset_cap is None and universe_cap is None:
        return p_star(k, ell)
    _check_budget(k, ell, budget)
    count = 0
    for parts in iter_distinct_sets(k, ell, universe_cap):
        if sumset_cap is None or sumsetbits(bits_of(parts)).bit_count() <= sumset_cap:
            count += 1
    return count


def count_small_sumset_sets(n: int, m: int, cap: int, budget: int = DEFAULT_BUDGET) -> int:
    """Exact number of m-element subsets of {1, ..., n} with |S+S| <= cap.

    Searches ascending with an incremental sumset bitmap; a branch dies as
    soon as the partial sumset already exceeds the cap (subsets only grow
    their sumsets).
    """
    if n < 1 or m < 0 or cap < 0:
        raise ValueError("need n >= 1, m >= 0, cap >= 0")
    candidates = comb(n, m)
    if candidates > budget:
        raise BudgetError(
            f"instance too large for exact enumeration (about {candidates} candidates)",
            estimate=candidates,
        )

    def rec(start: int, picked: int, bits: int, ss: int) -> int:
        if picked == m:
            return 1
        total = 0
        for v in range(start, n - (m - picked) + 2):
            nb = bits | (1 << v)
            nss = ss | (nb << v)
            if nss.bit_count() <= cap:
                total += rec(v + 1, picked + 1, nb, nss)
        return total

    return rec(1, 0, 0, 0)


def _check_budget(k: int, ell: int, budget: int) -> None:
    candidates = p_star(k, ell)
    if candidates > budget:
        raise BudgetError(
            f"instance too large for exact enumeration (about {candidates} candidates)",
            estimate=candidates,
        )
