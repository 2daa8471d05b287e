"""Extremal constructions witnessing the upper bounds on f(n,m).

Part labels are contiguous id ranges (X first) so tests can address the
inner bipartition A,B and the sides Y_i deterministically. Rounding in
general_fig1 follows r = round(sqrt(2ka/(k+1))), |X| = ceil((n+(k-1)r)/k),
with the remainder spread over the Y_i as evenly as possible (larger first);
the achieved edge count is reported, never padded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .bounds import g1, turan_number, turan_parts_sizes
from .graph_core import Graph, GraphError


class ConstructionError(ValueError):
    """Construction parameters outside their validity range."""


def _complete_multipartite(parts: list[list[int]], n: int,
                           extra: list[tuple[int, int]] | None = None) -> Graph:
    edges = []
    for i, p in enumerate(parts):
        for q in parts[i + 1:]:
            edges.extend((u, v) for u in p for v in q)
    if extra:
        edges.extend(extra)
    return Graph.from_edge_list(n, edges)


def turan_parts(k: int, n: int) -> list[list[int]]:
    sizes = turan_parts_sizes(k, n)
    parts, start = [], 0
    for s in sizes:
        parts.append(list(range(start, start + s)))
        start += s
    return parts


def turan_graph(k: int, n: int) -> Graph:
    """T_k(n): complete k-partite, sides as equal as possible."""
    if k < 1:
        raise ConstructionError("k must be >= 1")
    g = _complete_multipartite(turan_parts(k, n), n)
    assert g.m == turan_number(k, n)
    return g


def turan_plus_edge(k: int, n: int) -> Graph:
    """T_k(n) plus one edge inside a largest class."""
    parts = turan_parts(k, n)
    if len(parts[0]) < 2:
        raise ConstructionError("largest class of T_k(n) has no room for an edge")
    return _complete_multipartite(parts, n, extra=[(parts[0][0], parts[0][1])])


def k1_isolated(n: int, m: int) -> Graph:
    """T_2(r) with n-r isolated vertices, r = g1(m); needs m <= t_2(n)."""
    if m > turan_number(2, n):
        raise ConstructionError(f"m={m} exceeds t_2({n})={turan_number(2, n)}")
    r = g1(m)
    parts = turan_parts(2, r)
    return _complete_multipartite(parts, n)


@dataclass(frozen=True)
class K2Parts:
    x: list[int]
    y: list[int]
    a: list[int]
    b: list[int]


def k2_bipartite(n: int, t: int, r: int) -> tuple[Graph, K2Parts]:
    """K_{t,n-t} with a copy of T_2(r) (sides A,B) inside the side of size t."""
    if not (0 <= r <= t <= n):
        raise ConstructionError(f"need 0 <= r <= t <= n, got t={t}, r={r}, n={n}")
    x = list(range(t))
    y = list(range(t, n))
    a = x[:(r + 1) // 2]
    b = x[(r + 1) // 2:r]
    inner = [(u, v) for u in a for v in b]
    g = _complete_multipartite([x, y], n, extra=inner)
    assert g.m == t * (n - t) + turan_number(2, r)
    return g, K2Parts(x, y, a, b)


@dataclass(frozen=True)
class Fig1Info:
    r: int
    x: list[int]
    ys: list[list[int]]
    a_side: list[int]
    b_side: list[int]
    m_actual: int
    m_target: int


def general_fig1(k: int, n: int, a: int) -> tuple[Graph, Fig1Info]:
    """Unbalanced k-partite graph with an r x r complete bipartite inside X.

    r = round(sqrt(2ka/(k+1))); |X| = ceil((n+(k-1)r)/k); the k-1 sides Y_i
    split the remainder as evenly as possible. The achieved edge count can
    deviate from t_k(n)+a by O(n) due to rounding and is reported in the info.
    """
    if k < 1:
        raise ConstructionError("k must be >= 1")
    if a < 0:
        raise ConstructionError("a must be >= 0")
    cap = turan_number(k + 1, n) - turan_number(k, n)
    if a > cap:
        raise ConstructionError(f"a={a} exceeds t_{k + 1}({n}) - t_{k}({n}) = {cap}")
    r = round(math.sqrt(2 * k * a / (k + 1)))
    x_size = -((n + (k - 1) * r) // -k)
    if 2 * r > x_size:
        raise ConstructionError(f"2r={2 * r} exceeds |X|={x_size}")
    if x_size > n:
        raise ConstructionError(f"|X|={x_size} exceeds n={n}")
    x = list(range(x_size))
    rest = n - x_size
    ys = []
    if k > 1:
        q, rem = divmod(rest, k - 1)
        start = x_size
        for i in range(k - 1):
            s = q + 1 if i < rem else q
            ys.append(list(range(start, start + s)))
            start += s
    a_side = x[:r]
    b_side = x[r:2 * r]
    inner = [(u, v) for u in a_side for v in b_side]
    g = _complete_multipartite([x, *ys], n, extra=inner)
    info = Fig1Info(r=r, x=x, ys=ys, a_side=a_side, b_side=b_side,
                    m_actual=g.m, m_target=turan_number(k, n) + a)
    return g, info


def fig1_chordal_upper_bound(k: int, n: int, info: Fig1Info) -> int:
    """kn - |X| + 2r - C(k+1,2), the forest-count bound for the fig1 family."""
    return k * n - len(info.x) + 2 * info.r - k * (k + 1) // 2
