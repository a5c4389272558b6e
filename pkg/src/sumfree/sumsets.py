"""Sumset algebra: A+B, span, doubling, translate sets, progression covers.

The sumset A+B = {a + b} is computed by OR-ing shifted bitmaps, so it costs
|A| big-integer shifts.  Always |A+B| >= |A| + |B| - 1, with equality
exactly for arithmetic progressions with a common difference, and the span
identity span(S+S) = 2 span(S) holds for every nonempty S.

Two structural tools build on this.  b_set(S, delta) collects the integer
translates y whose shifted copy S + y escapes S + S in at most delta*|S|
elements; a pair-counting argument bounds its size by |S+S| / (1 - delta).
freiman_cover(S) returns the shortest arithmetic progression containing S
whenever the doubling is small (|S+S| <= 3|S| - 4); in that regime the
cover provably has at most |S+S| - |S| + 1 terms.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .intset import IntSet, coerce_bits, iter_bits


def sumset(a_values, b_values=None) -> IntSet:
    """The sumset {a + b : a in A, b in B}; B defaults to A."""
    a_bits = coerce_bits(a_values)
    b_bits = a_bits if b_values is None else coerce_bits(b_values)
    if not a_bits or not b_bits:
        raise ValueError("sumset of an empty set is undefined")
    out = 0
    for a in iter_bits(a_bits):
        out |= b_bits << a
    return IntSet.from_bits(out.bit_length() - 1, out)


def span(values) -> int:
    """max(S) - min(S); raises on the empty set."""
    bits = coerce_bits(values)
    if not bits:
        raise ValueError("undefined span: empty set")
    return bits.bit_length() - (bits & -bits).bit_length()


def doubling(values) -> Fraction:
    """|S+S| / |S| as an exact fraction."""
    bits = coerce_bits(values)
    if not bits:
        raise ValueError("doubling of an empty set is undefined")
    return Fraction(sumsetbits(bits).bit_count(), bits.bit_count())


def sumsetbits(bits: int) -> int:
    """Bitmap of S+S from the bitmap of S (0 for the empty set)."""
    out = 0
    for a in iter_bits(bits):
        out |= bits << a
    return out


def b_set(values, delta) -> tuple[int, ...]:
    """Integers y with |(S + y) \\ (S + S)| <= delta * |S|, ascending.

    Only y in [min(S+S) - max(S), max(S+S) - min(S)] can qualify: outside
    that window every element of S + y escapes, and |S| > delta*|S| for
    delta < 1.  The result may include y <= 0, so it is returned as a plain
    tuple of integers rather than a positive-universe set.
    """
    delta = Fraction(delta)
    if not (0 <= delta < 1):
        raise ValueError("delta must lie in [0, 1)")
    bits = coerce_bits(values)
    if not bits:
        raise ValueError("b_set of an empty set is undefined")
    size = bits.bit_count()
    ss = sumsetbits(bits)
    lo = ((ss & -ss).bit_length() - 1) - (bits.bit_length() - 1)
    hi = (ss.bit_length() - 1) - ((bits & -bits).bit_length() - 1)
    allowed = delta * size
    out = []
    for y in range(lo, hi + 1):
        shifted = bits << y if y >= 0 else bits >> (-y)
        # translates falling to <= 0 vanish from the bitmap; they escape too
        escapes = (shifted & ~ss).bit_count() + (size - shifted.bit_count())
        if escapes <= allowed:
            out.append(y)
    return tuple(out)


@dataclass(frozen=True)
class APCover:
    """Arithmetic progression {first, first + difference, ...} of `length` terms."""

    first: int
    difference: int
    length: int

    def members(self) -> tuple[int, ...]:
        return tuple(self.first + i * self.difference for i in range(self.length))

    def contains(self, values) -> bool:
        last = self.first + (self.length - 1) * self.difference
        return all(
            self.first <= v <= last and (v - self.first) % self.difference == 0
            for v in iter_bits(coerce_bits(values))
        )


def freiman_cover(values):
    """Shortest progression containing S when |S+S| <= 3|S| - 4, else None.

    The cover uses difference g = gcd of the consecutive differences of S
    and first term min(S); any progression containing S must refine it, so
    this one has minimal length span(S)/g + 1.  In the small-doubling
    regime that length never exceeds |S+S| - |S| + 1.
    """
    bits = coerce_bits(values)
    size = bits.bit_count()
    if size < 3:
        raise ValueError("too small for the small-doubling regime (need |S| >= 3)")
    if sumsetbits(bits).bit_count() > 3 * size - 4:
        return None
    elements = list(iter_bits(bits))
    g = 0
    for prev, cur in zip(elements, elements[1:]):
        g = gcd(g, cur - prev)
    return APCover(first=elements[0], difference=g, length=(elements[-1] - elements[0]) // g + 1)
