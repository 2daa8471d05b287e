"""Bound functions: Turan numbers t_k(n), g1, g2 (with witness), g3.

All bound arithmetic is exact integers; general_target is the single
floating-point formula and is used for reporting only.

g2(n,m) is the minimum of 2n-t+r over integer pairs t,r >= 0 with
t(n-t) + t_2(r) >= m. The search runs t in [0,n] (t beyond n never improves:
the quadratic penalty t(t-n) costs more r than the -t term saves) and for
each t picks the minimal feasible r by bisection, so the witness tie-break
is smallest t, then smallest r. For m <= t_3(n) the optimum also satisfies
r <= t <= n; larger m can need r > n, which the table accommodates.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from dataclasses import dataclass
from functools import lru_cache


class BoundDomainError(ValueError):
    """Bound function queried outside its domain."""


@lru_cache(maxsize=None)
def turan_parts_sizes(k: int, n: int) -> tuple[int, ...]:
    """Part sizes of the balanced complete k-partite graph, largest first."""
    if k < 1:
        raise BoundDomainError("k must be >= 1")
    q, rem = divmod(n, k)
    return tuple([q + 1] * rem + [q] * (k - rem))


@lru_cache(maxsize=None)
def turan_number(k: int, n: int) -> int:
    """t_k(n), computed combinatorially from the part sizes."""
    sizes = turan_parts_sizes(k, n)
    return n * (n - 1) // 2 - sum(s * (s - 1) // 2 for s in sizes)


def _t2_table(upto: int) -> list[int]:
    return [turan_number(2, r) for r in range(upto + 1)]


def g1(m: int) -> int:
    """Minimal r with t_2(r) >= m."""
    if m < 0:
        raise BoundDomainError("m must be >= 0")
    if m == 0:
        return 0
    r = math.isqrt(4 * m)  # t_2(r) = floor(r^2/4)
    while turan_number(2, r) < m:
        r += 1
    while r > 0 and turan_number(2, r - 1) >= m:
        r -= 1
    return r


@dataclass(frozen=True)
class BoundWitness:
    value: int
    t: int
    r: int


@lru_cache(maxsize=None)
def g2_witness(n: int, m: int) -> BoundWitness:
    """Exact g2(n,m) with its minimizing (t,r); smallest t then r on ties."""
    if n < 1:
        raise BoundDomainError("n must be >= 1")
    if m < turan_number(2, n) + 1:
        raise BoundDomainError(f"g2 needs m >= t_2(n)+1 = {turan_number(2, n) + 1}")
    r_hi = max(n, g1(m))
    t2 = _t2_table(r_hi)
    best = None
    for t in range(n + 1):
        gap = m - t * (n - t)
        r = 0 if gap <= 0 else bisect_left(t2, gap)
        value = 2 * n - t + r
        if best is None or value < best.value:
            best = BoundWitness(value, t, r)
    assert best is not None
    return best


def g2(n: int, m: int) -> int:
    return g2_witness(n, m).value


def g2_all_witnesses(n: int, m: int) -> list[BoundWitness]:
    """Every optimal (t, minimal-r) pair; used by the lemma property suite."""
    opt = g2_witness(n, m).value
    r_hi = max(n, g1(m))
    t2 = _t2_table(r_hi)
    out = []
    for t in range(n + 1):
        gap = m - t * (n - t)
        r = 0 if gap <= 0 else bisect_left(t2, gap)
        if 2 * n - t + r == opt:
            out.append(BoundWitness(opt, t, r))
    return out


def g3(n: int) -> int:
    """g_3(n) = 3n - ceil(n/3) + 2."""
    if n < 1:
        raise BoundDomainError("n must be >= 1")
    return 3 * n - (n + 2) // 3 + 2


@dataclass(frozen=True)
class GeneralBoundParams:
    k: int
    n: int
    a: int
    C: float


def general_target(p: GeneralBoundParams) -> float:
    """(k-1/k)n + sqrt(2(k+1)a/k) - C*sqrt(n) - C(k+1,2); callers round."""
    if p.a < 1:
        raise BoundDomainError("a must be >= 1")
    k, n, a = p.k, p.n, p.a
    return ((k - 1 / k) * n + math.sqrt(2 * (k + 1) * a / k)
            - p.C * math.sqrt(n) - k * (k + 1) // 2)


def conj_general_bound(k: int, n: int, m: int) -> tuple[int, int, int]:
    """Experimental enumerator for the general-k two-parameter bound.

    Returns (value, t, r) minimizing kn - t + r - C(k+1,2) over t,r >= 0 with
    t_{k-1}(n-t) + t(n-t) + t_2(r) >= m. Same search pattern as g2.
    """
    if k < 2:
        raise BoundDomainError("conjectured bound needs k >= 2")
    if m < turan_number(k, n) + 1:
        raise BoundDomainError(f"needs m >= t_k(n)+1 = {turan_number(k, n) + 1}")
    r_hi = max(n, g1(m))
    t2 = _t2_table(r_hi)
    best = None
    for t in range(n + 1):
        gap = m - turan_number(k - 1, n - t) - t * (n - t)
        r = 0 if gap <= 0 else bisect_left(t2, gap)
        value = k * n - t + r - k * (k + 1) // 2
        if best is None or value < best[0]:
            best = (value, t, r)
    assert best is not None
    return best
