"""Log-domain evaluation of closed-form bounds and moment quantities.

Quantities like 2^(Cn/m) * C(ceil(n/2), m) or (e^2 k / l^2)^l overflow any
fixed-width float long before the interesting parameter range, so every
bound here lives in the natural-log domain (LogValue).  Comparisons use a
relative tolerance of 1e-9 on the logs.

Also here: the standard binomial-coefficient inequalities

    C(a, b-c)    <= (b/(a-b))^c * C(a, b)
    C(a-c, b)    <= ((a-c)/a)^b * C(a, b)
    C(a-c, b-d)  <= ((a-c)/a)^(b-d) * (b/(a-b))^d * C(a, b)

for a > b > c >= 0, d <= b; the tail-sum bound
sum_{j>=1} j^a e^(-bj) <= 2 Gamma(a+1) / b^(a+1); the first and second
moments mu, Delta of the hypergeometric dependency-graph inequality for a
family of subsets; and the forbidden-pair graph on the top half of
{1, ..., n} whose edges are {x, x+s} for s in a fixed low set S, with k
edges and maximum degree at most 2|S|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from math import exp, inf, lgamma, log
from typing import Optional, Sequence

from .intset import IntSet, coerce_bits, iter_bits

REL_TOL = 1e-9


@dataclass(frozen=True)
class LogValue:
    """A nonnegative real stored as its natural log (-inf encodes exact 0)."""

    log: float

    @classmethod
    def of(cls, value) -> "LogValue":
        if value < 0:
            raise ValueError("LogValue holds nonnegative reals")
        if value == 0:
            return cls(-inf)
        if isinstance(value, int):
            return cls(_log_of_int(value))
        return cls(log(value))

    @classmethod
    def from_log(cls, lv: float) -> "LogValue":
        return cls(lv)

    @property
    def is_zero(self) -> bool:
        return self.log == -inf

    def value(self) -> float:
        return exp(self.log)

    def __mul__(self, other: "LogValue") -> "LogValue":
        return LogValue(self.log + other.log)

    def __truediv__(self, other: "LogValue") -> "LogValue":
        if other.is_zero:
            raise ZeroDivisionError("division by LogValue zero")
        return LogValue(self.log - other.log)

    def __add__(self, other: "LogValue") -> "LogValue":
        a, b = self.log, other.log
        if a == -inf:
            return other
        if b == -inf:
            return self
        hi, lo = (a, b) if a >= b else (b, a)
        return LogValue(hi + math.log1p(exp(lo - hi)))

    def __pow__(self, e: float) -> "LogValue":
        if self.is_zero:
            return LogValue(0.0) if e == 0 else LogValue(-inf)
        return LogValue(self.log * e)

    def leq(self, other: "LogValue", rtol: float = REL_TOL) -> bool:
        """self <= other up to relative tolerance rtol on the logs."""
        if self.is_zero:
            return True
        if other.is_zero:
            return False
        return self.log <= other.log + rtol * max(1.0, abs(self.log), abs(other.log))

    def close(self, other: "LogValue", rtol: float = REL_TOL) -> bool:
        if self.is_zero or other.is_zero:
            return self.is_zero and other.is_zero
        return abs(self.log - other.log) <= rtol * max(1.0, abs(self.log), abs(other.log))


def _log_of_int(v: int) -> float:
    if v.bit_length() <= 900:
        return log(v)
    # exact shift keeps the mantissa in float range for huge integers
    shift = v.bit_length() - 64
    return log(v >> shift) + shift * log(2.0)


def log_binom(a: int, b: int) -> LogValue:
    """ln C(a, b) via log-gamma; zero for b outside [0, a]."""
    if a < 0:
        raise ValueError("a must be >= 0")
    if b < 0 or b > a:
        return LogValue(-inf)
    return LogValue(lgamma(a + 1) - lgamma(b + 1) - lgamma(a - b + 1))


def log_binom_real(a: float, b: int) -> LogValue:
    """ln C(a, b) for real a >= b (generalized binomial via log-gamma)."""
    if b < 0 or a < b:
        return LogValue(-inf)
    return LogValue(lgamma(a + 1) - lgamma(b + 1) - lgamma(a - b + 1))


# ----------------------------------------------------------------------
# Inequality checkers


@dataclass(frozen=True)
class InequalityCheck:
    name: str
    lhs: LogValue
    rhs: LogValue

    @property
    def passed(self) -> bool:
        return self.lhs.leq(self.rhs)


def check_binom_inequalities(a: int, b: int, c: int, d: int = 0) -> list[InequalityCheck]:
    """Evaluate the three binomial-shift inequalities at (a, b, c, d)."""
    if not (a > b > c >= 0):
        raise ValueError("need a > b > c >= 0")
    if not (0 <= d <= b):
        raise ValueError("need 0 <= d <= b")
    ratio_down = LogValue(c * (log(b) - log(a - b)))
    ratio_shrink = LogValue(b * (log(a - c) - log(a)))
    checks = [
        InequalityCheck("shift-second-index", log_binom(a, b - c), ratio_down * log_binom(a, b)),
        InequalityCheck("shift-first-index", log_binom(a - c, b), ratio_shrink * log_binom(a, b)),
    ]
    both = LogValue((b - d) * (log(a - c) - log(a)) + d * (log(b) - log(a - b)))
    checks.append(
        InequalityCheck("shift-both-indices", log_binom(a - c, b - d), both * log_binom(a, b))
    )
    return checks


@dataclass(frozen=True)
class GammaSumCheck:
    a: int
    b: float
    tail_sum: float
    gamma_bound: float  # Gamma(a+1) / b^(a+1)
    constant: float  # tail_sum / gamma_bound
    passed: bool  # tail_sum <= cap * gamma_bound


def check_gamma_sum(a: int, b: float, cap: float = 2.0) -> GammaSumCheck:
    """Sum j^a e^(-bj) to convergence and compare with cap * Gamma(a+1)/b^(a+1).

    Terms are added until they drop below 1e-15 of the partial sum (and the
    summand is already decreasing).
    """
    if a < 1 or b <= 0:
        raise ValueError("need a >= 1 and b > 0")
    total = 0.0
    j = 1
    while True:
        term = j**a * exp(-b * j)
        total += term
        if j > a / b and term < 1e-15 * total:
            break
        j += 1
    bound = exp(lgamma(a + 1) - (a + 1) * log(b))
    return GammaSumCheck(
        a=a, b=b, tail_sum=total, gamma_bound=bound, constant=total / bound, passed=total <= cap * bound
    )


# ----------------------------------------------------------------------
# First/second moments of the dependency family


@dataclass(frozen=True)
class JansonQuantities:
    mu: LogValue
    delta: LogValue
    bound: LogValue  # max(e^(-mu/2), e^(-mu^2 / (2*Delta)))


def janson_quantities(family: Sequence, ground_size: int, draw_size: int) -> JansonQuantities:
    """Moments of the family {U_i} under a uniform draw of draw_size elements.

    mu    = sum_i (m/n)^|U_i|
    Delta = sum over ordered pairs i != j with U_i and U_j intersecting of
            (m/n)^|U_i union U_j|
    bound = max(e^(-mu/2), e^(-mu^2/(2 Delta))), second term dropped when
            Delta = 0.
    """
    sets = [frozenset(u) for u in family]
    if any(not u for u in sets):
        raise ValueError("family members must be nonempty")
    n, m = ground_size, draw_size
    if not (0 <= m <= n):
        raise ValueError("need 0 <= draw_size <= ground_size")
    q = m / n
    mu = 0.0
    for u in sets:
        mu += q ** len(u)
    delta = 0.0
    for i, u in enumerate(sets):
        for j, w in enumerate(sets):
            if i != j and u & w:
                delta += q ** len(u | w)
    terms = [-mu / 2.0]
    if delta > 0:
        terms.append(-(mu * mu) / (2.0 * delta))
    return JansonQuantities(
        mu=LogValue.of(mu) if mu else LogValue(-inf),
        delta=LogValue.of(delta) if delta else LogValue(-inf),
        bound=LogValue(max(terms)),
    )


# ----------------------------------------------------------------------
# Forbidden-pair graph on the top half


@dataclass(frozen=True)
class PairGraph:
    """Graph on {ceil(n/2)+1, ..., n} minus `excluded`, edges {x, x+s}, s in S."""

    n: int
    vertices: IntSet
    edges: tuple[tuple[int, int], ...]

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def max_degree(self) -> int:
        deg: dict[int, int] = {}
        for x, y in self.edges:
            deg[x] = deg.get(x, 0) + 1
            deg[y] = deg.get(y, 0) + 1
        return max(deg.values(), default=0)


def build_pair_graph(n: int, s_values, excluded=()) -> PairGraph:
    """Build the forbidden-pair graph for a low set S.

    With nothing excluded and n even, the edge count equals
    sum over s in S of (n/2 - s), the total low-part deficiency, and the
    maximum degree is at most 2|S|.
    """
    s_bits = coerce_bits(s_values)
    half = (n + 1) // 2
    if s_bits.bit_length() - 1 > half:
        raise ValueError("S must lie in {1, ..., ceil(n/2)}")
    ex_bits = coerce_bits(excluded)
    vbits = (((1 << (n + 1)) - 1) ^ ((1 << (half + 1)) - 1)) & ~ex_bits
    edges = []
    for s in iter_bits(s_bits):
        for x in iter_bits(vbits):
            y = x + s
            if y > n:
                break
            if (vbits >> y) & 1:
                edges.append((x, y))
    edges.sort()
    return PairGraph(n=n, vertices=IntSet.from_bits(n, vbits), edges=tuple(edges))


# ----------------------------------------------------------------------
# Closed-form right-hand sides


LN2 = log(2.0)


def theorem_rhs(name: str, **params) -> LogValue:
    """Log of a named closed-form bound.

    CEthm : 2^(C n / m) * C(ceil(n/2), m)          params n, m, C
    S+S   : 2^(delta l) * (2 c e k / (3 l^2))^l    params k, ell, c, delta
    S+S2  : 2^(delta l) * ((4 lam - 3) e / 6)^l    params ell, lam, delta (k ignored)
    parts : (e^2 k / l^2)^l                        params k, ell
    conj  : 2^(delta m) * C(N/2, m)                params N, m, delta
    """
    if name == "CEthm":
        n, m, c = params["n"], params["m"], params["C"]
        return LogValue(c * n / m * LN2) * log_binom((n + 1) // 2, m)
    if name == "S+S":
        k, ell, c, delta = params["k"], params["ell"], params["c"], params["delta"]
        if ell == 0:
            return LogValue(delta * 0.0)
        return LogValue(delta * ell * LN2 + ell * (log(2 * c * k / 3) + 1 - 2 * log(ell)))
    if name == "S+S2":
        ell, lam, delta = params["ell"], params["lam"], params["delta"]
        return LogValue(delta * ell * LN2 + ell * (log((4 * lam - 3) / 6) + 1))
    if name == "parts":
        k, ell = params["k"], params["ell"]
        if ell == 0:
            return LogValue(0.0)
        if k == 0:
            return LogValue(-inf)
        return LogValue(ell * (2 + log(k) - 2 * log(ell)))
    if name == "conj":
        cap_n, m, delta = params["N"], params["m"], params["delta"]
        return LogValue(delta * m * LN2) * log_binom_real(cap_n / 2, m)
    raise ValueError(f"unknown bound name {name!r}")


def empirical_constant(n: int, m: int, exact_count: int) -> Optional[float]:
    """Invert the count bound: C*(n, m) = (m/n) log2(count / C(ceil(n/2), m)).

    None when the count is zero (the constant is undefined).
    """
    if exact_count < 0:
        raise ValueError("count must be >= 0")
    if exact_count == 0:
        return None
    log2_count = _log_of_int(exact_count) / LN2
    log2_binom = log_binom((n + 1) // 2, m).log / LN2
    return m / n * (log2_count - log2_binom)
