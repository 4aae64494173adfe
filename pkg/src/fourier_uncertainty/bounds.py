"""The divisor-interpolation bound u(n,k) and its calculus.

For 1 <= k <= n, let d1 be the largest divisor of n with d1 <= k and d2 the
smallest with d2 >= k.  Then u(n,k) = n(d1+d2-k)/(d1*d2) linearly interpolates
n/d between neighboring divisors; its graph is the lower convex polyline
through the points (d, n/d).  The ceiling of u is the integer bound that
actually binds a spectral support size.  `submult_check` exhaustively
verifies u(d,s)*u(n/d,t) >= u(n,st) with per-triple case traces.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

__all__ = [
    "DivisorPair",
    "BoundValue",
    "HullDiagram",
    "SubmultTrace",
    "divisors",
    "nearest_divisors",
    "u_bound",
    "hull_points",
    "theta_lower",
    "submult_traces",
    "submult_check",
]


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i != n // i:
                large.append(n // i)
        i += 1
    return tuple(small + large[::-1])


@dataclass(frozen=True)
class DivisorPair:
    """Divisors of n neighboring k: d1 <= k <= d2 with nothing in between."""

    n: int
    k: Fraction
    d1: int
    d2: int


@dataclass(frozen=True)
class BoundValue:
    n: int
    k: Fraction
    pair: DivisorPair
    value: Fraction
    ceiling: int


def _as_k(n: int, k) -> Fraction:
    k = Fraction(k)
    if not 1 <= k <= n:
        raise ValueError(f"k must satisfy 1 <= k <= {n}, got {k}")
    return k


def nearest_divisors(n: int, k) -> DivisorPair:
    if n < 1:
        raise ValueError("n must be >= 1")
    k = _as_k(n, k)
    divs = divisors(n)
    # d1: last divisor <= k; d2: first divisor >= k
    i = bisect_right(divs, k)
    d1 = divs[i - 1]
    j = bisect_left(divs, k)
    d2 = divs[j] if j < len(divs) else divs[-1]
    return DivisorPair(n, k, d1, d2)


def u_bound(n: int, k) -> BoundValue:
    """u(n,k) = n(d1+d2-k)/(d1*d2), exact; at a divisor d this is n/d."""
    pair = nearest_divisors(n, k)
    value = Fraction(n, pair.d1 * pair.d2) * (pair.d1 + pair.d2 - pair.k)
    ceiling = -((-value.numerator) // value.denominator)
    return BoundValue(n, pair.k, pair, value, ceiling)


def theta_lower(n: int, k) -> int:
    """ceil(u(n,k)): the integer lower bound on spectral support size."""
    return u_bound(n, k).ceiling


@dataclass(frozen=True)
class HullDiagram:
    """The lower convex polyline through the points (d, n/d), d | n."""

    n: int
    vertices: tuple[tuple[int, int], ...]
    segments: tuple[tuple[tuple[int, int], tuple[int, int]], ...]

    def evaluate(self, k) -> Fraction:
        """Polyline value at k; equals u(n,k) identically."""
        k = _as_k(self.n, k)
        for (x1, y1), (x2, y2) in self.segments:
            if x1 <= k <= x2:
                return Fraction(y1) + Fraction(y2 - y1, x2 - x1) * (k - x1)
        # n = 1: single vertex, no segments
        return Fraction(self.vertices[0][1])


def hull_points(n: int) -> HullDiagram:
    if n < 1:
        raise ValueError("n must be >= 1")
    verts = tuple((d, n // d) for d in divisors(n))
    segs = tuple((verts[i], verts[i + 1]) for i in range(len(verts) - 1))
    return HullDiagram(n, verts, segs)


# ---------------------------------------------------------------------------
# submultiplicativity sweep


@dataclass(frozen=True)
class SubmultTrace:
    """One checked triple (d, s, t) for u(d,s)*u(n/d,t) >= u(n,st).

    a_i, b_i, c_i are the divisor neighbors of s in d, t in n/d, and k = st
    in n.  m1 <= s <= m2 is the bracket max{a1, k/b2} <= s <= min{a2, k/b1};
    case_id classifies where k falls after relabeling so that a1*b2 <= a2*b1.
    """

    n: int
    d: int
    s: int
    t: int
    a1: int
    a2: int
    b1: int
    b2: int
    c1: int
    c2: int
    m1: Fraction
    m2: Fraction
    case_id: int
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs >= self.rhs

    @property
    def bracket_ok(self) -> bool:
        return self.m1 <= self.s <= self.m2


def _trace(n: int, d: int, s: int, t: int) -> SubmultTrace:
    k = s * t
    pa = nearest_divisors(d, s)
    pb = nearest_divisors(n // d, t)
    pc = nearest_divisors(n, k)
    a1, a2, b1, b2 = pa.d1, pa.d2, pb.d1, pb.d2
    lhs = u_bound(d, s).value * u_bound(n // d, t).value
    rhs = u_bound(n, k).value
    m1 = max(Fraction(a1), Fraction(k, b2))
    m2 = min(Fraction(a2), Fraction(k, b1))
    # classify against the sorted products a1b1 <= a1b2 <= a2b1 <= a2b2,
    # relabeling (as the case analysis may) so the middle pair is ordered
    mid_lo, mid_hi = sorted((a1 * b2, a2 * b1))
    if k <= mid_lo:
        case_id = 1
    elif k <= mid_hi:
        case_id = 2
    else:
        case_id = 3
    return SubmultTrace(n, d, s, t, a1, a2, b1, b2, pc.d1, pc.d2, m1, m2, case_id, lhs, rhs)


def submult_traces(n: int) -> list[SubmultTrace]:
    """All traces for divisors d of n and 1 <= s <= d, 1 <= t <= n/d."""
    if n < 2:
        raise ValueError("n must be >= 2")
    out = []
    for d in divisors(n):
        for s in range(1, d + 1):
            for t in range(1, n // d + 1):
                out.append(_trace(n, d, s, t))
    return out


def submult_check(n: int) -> list[SubmultTrace]:
    """Violating traces only; empty means the inequality held everywhere."""
    bad = [tr for tr in submult_traces(n) if not tr.holds]
    return sorted(bad, key=lambda tr: (tr.n, tr.d, tr.s, tr.t))
