"""Exact extraction algorithms transcribed from the inductive proofs.

Each algorithm returns a certified chordal subgraph meeting its bound and
containing the required anchor clique:

  * extract_k1: >= g1(m)-1 edges (any graph, m >= 1);
  * extract_k2: >= g2(n,m)-3 edges containing a given anchor triangle
    (m >= t_2(n)+1);
  * extract_k3: >= g3(n)-6 edges containing a given anchor 4-clique
    (m = t_3(n)+1; richer inputs are trimmed by deleting surplus non-anchor
    edges lexicographically first, which is sound by monotonicity).

Every existence step the proofs assert ("such a vertex exists because...")
is implemented as a search that raises InternalInvariantError when empty;
those errors signal a transcription bug, never bad user input. All free
choices are pinned: smallest vertex id, lexicographically smallest tuple.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass
from typing import Optional, Sequence

from .bounds import g1, g2, g3, turan_number
from .chordality import ChordalBuilder, ChordalSubgraph, star_union
from .graph_core import (Graph, bits_of, common_neighborhood_mask, find_clique,
                         mask_of)
from .oracle import max_chordal_subgraph
from .report import (ExtractionInputError, ExtractionReport, InternalInvariantError,
                     TraceStep, invariant, lift_trace, norm_edge)


@dataclass(frozen=True)
class TriangleAnchor:
    x: int
    y: int
    z: int

    def vertices(self) -> tuple[int, int, int]:
        return tuple(sorted((self.x, self.y, self.z)))


@dataclass(frozen=True)
class CliqueAnchor4:
    x1: int
    x2: int
    x3: int
    x4: int

    def vertices(self) -> tuple[int, int, int, int]:
        return tuple(sorted((self.x1, self.x2, self.x3, self.x4)))


def _normalize_anchor(g: Graph, anchor, size: int) -> tuple[int, ...]:
    if isinstance(anchor, TriangleAnchor) or isinstance(anchor, CliqueAnchor4):
        verts = anchor.vertices()
    else:
        verts = tuple(sorted(anchor))
    if len(verts) != size or len(set(verts)) != size:
        raise ExtractionInputError(f"anchor must be {size} distinct vertices")
    for v in verts:
        if not (0 <= v < g.n):
            raise ExtractionInputError(f"anchor vertex {v} out of range")
    if not g.is_clique(mask_of(verts)):
        raise ExtractionInputError(f"anchor {verts} is not a clique in the graph")
    return verts


def _clique_edges(verts: Sequence[int]) -> tuple[tuple[int, int], ...]:
    vs = sorted(verts)
    return tuple((vs[i], vs[j]) for i in range(len(vs)) for j in range(i + 1, len(vs)))


def _bump_recursion(n: int) -> None:
    need = 8 * n + 2000
    if sys.getrecursionlimit() < need:
        sys.setrecursionlimit(need)


def _inverse_map(vmap: list[int]) -> dict[int, int]:
    return {h: i for i, h in enumerate(vmap)}


# ----------------------------------------------------------------------
# k = 1
# ----------------------------------------------------------------------

def extract_k1(g: Graph) -> ExtractionReport:
    """Chordal subgraph with at least g1(m)-1 edges."""
    if g.m < 1:
        raise ExtractionInputError("extract_k1 needs at least one edge")
    t0 = time.perf_counter()
    sub, trace = _k1(g)
    guarantee = g1(g.m) - 1
    invariant(sub.m >= guarantee, "k1 guarantee failed")
    return ExtractionReport("k1", g.n, g.m, None, sub, sub.m, guarantee,
                            tuple(trace), time.perf_counter() - t0)


def _k1(g: Graph) -> tuple[ChordalSubgraph, list[TraceStep]]:
    # iterative: peel minimum-degree endpoints until the two-vertex star fires
    peels: list[tuple[Graph, list[int], int, int]] = []  # (host, vmap, v, other)
    cur = g
    while True:
        m = cur.m
        if m == 0:
            b = ChordalBuilder(cur)
            sub, trace = b.subgraph(), [TraceStep("k1-empty")]
            break
        r = g1(m)
        x, y = cur.edges()[0]
        if cur.degree(x) + cur.degree(y) >= r:
            sub = star_union(cur, [x, y])
            trace = [TraceStep("k1-star", (), sub.edges)]
            break
        v = x if (cur.degree(x), x) <= (cur.degree(y), y) else y
        other = y if v == x else x
        nxt, vmap = cur.induced_complement([v])
        invariant(g1(nxt.m) >= r - 1, "k1 recursion bound failed")
        peels.append((cur, vmap, v, other))
        cur = nxt
    # unwind: lift the certificate level by level, re-adding the peeled edge
    for host, vmap, v, other in reversed(peels):
        b = ChordalBuilder(host)
        b.replay(sub.cert, vmap)
        b.add(v, [other])
        trace = [TraceStep("k1-delete-endpoint", (v,), (norm_edge(v, other),))] \
            + lift_trace(trace, vmap)
        sub = b.subgraph()
    return sub, trace


# ----------------------------------------------------------------------
# k = 2
# ----------------------------------------------------------------------

def extract_k2(g: Graph, anchor) -> ExtractionReport:
    """Chordal subgraph with >= g2(n,m)-3 edges containing the anchor triangle."""
    verts = _normalize_anchor(g, anchor, 3)
    if g.m < turan_number(2, g.n) + 1:
        raise ExtractionInputError(
            f"extract_k2 needs m >= t_2(n)+1 = {turan_number(2, g.n) + 1}")
    _bump_recursion(g.n)
    t0 = time.perf_counter()
    sub, trace = _k2(g, verts)
    guarantee = g2(g.n, g.m) - 3
    _check_result(sub, verts, guarantee, "k2")
    return ExtractionReport("k2", g.n, g.m, verts, sub, sub.m, guarantee,
                            tuple(trace), time.perf_counter() - t0)


def _check_result(sub: ChordalSubgraph, anchor: tuple[int, ...],
                  guarantee: int, tag: str) -> None:
    invariant(sub.m >= guarantee, f"{tag} guarantee failed: {sub.m} < {guarantee}")
    edge_set = sub.edge_set()
    for e in _clique_edges(anchor):
        invariant(e in edge_set, f"{tag} anchor edge {e} missing")


def _k2(g: Graph, anchor: tuple[int, int, int]) -> tuple[ChordalSubgraph, list[TraceStep]]:
    n, m = g.n, g.m
    invariant(m >= turan_number(2, n) + 1, "k2 recursion below edge threshold")
    if n <= 3:
        invariant(n == 3 and m == 3, "k2 base must be K3")
        b = ChordalBuilder(g)
        b.add(0, [])
        b.add(1, [0])
        b.add(2, [0, 1])
        return b.subgraph(), [TraceStep("k2-base-K3", (), _clique_edges((0, 1, 2)))]
    gval = g2(n, m)
    x, y, z = anchor
    degs = {v: g.degree(v) for v in anchor}

    # Case 1: the anchor star is big enough on its own
    if degs[x] + degs[y] + degs[z] >= gval:
        sub = star_union(g, anchor)
        _check_result(sub, anchor, gval - 3, "k2-case1")
        return sub, [TraceStep("k2-case1-star", (), sub.edges)]

    pairs = [(x, y), (x, z), (y, z)]

    # Case 2: some anchor pair has degree sum <= n; delete it
    for u, v in pairs:
        if degs[u] + degs[v] <= n:
            w3 = next(t for t in anchor if t not in (u, v))
            gi, vmap = g.induced_complement([u, v])
            invariant(gi.m == m - degs[u] - degs[v] + 1, "k2 case2 edge count")
            invariant(gi.m >= turan_number(2, n - 2) + 1, "k2 case2 threshold")
            tri = find_clique(gi, 3)
            invariant(tri is not None, "k2 case2: no triangle after deletion")
            sub, subtrace = _k2(gi, tuple(tri))
            b = ChordalBuilder(g)
            b.replay(sub.cert, vmap)
            b.add(u, [w3])
            b.add(v, [u, w3])
            steps = [TraceStep("k2-case2-delete-pair", (u, v),
                               _clique_edges((u, v, w3)))] + lift_trace(subtrace, vmap)
            return b.subgraph(), steps

    # cases 1-2 excluded forces a slack edge
    invariant(m >= turan_number(2, n) + 2, "k2: m >= t_2(n)+2 after cases 1-2")

    # Case 3: some anchor pair lies on exactly one triangle
    for u, v in pairs:
        cn = common_neighborhood_mask(g, [u, v])
        if cn.bit_count() == 1:
            w3 = next(t for t in anchor if t not in (u, v))
            invariant(cn == 1 << w3, "k2 case3: unique triangle is not the anchor")
            invariant(degs[u] + degs[v] == n + 1, "k2 case3 degree identity")
            for q in range(n):
                if q in (u, v, w3):
                    continue
                invariant(g.has_edge(q, u) != g.has_edge(q, v),
                          "k2 case3: outside vertex not adjacent to exactly one")
            gi, vmap = g.induced_complement([u, v])
            invariant(gi.m == m - n, "k2 case3 edge count")
            invariant(gi.m >= turan_number(2, n - 2) + 1, "k2 case3 threshold")
            tri = find_clique(gi, 3)
            invariant(tri is not None, "k2 case3: no triangle after deletion")
            sub, subtrace = _k2(gi, tuple(tri))
            b = ChordalBuilder(g)
            b.replay(sub.cert, vmap)
            if b.degree(w3) == 0:
                w_opts = g.adj_mask(w3) & ~mask_of([u, v])
                invariant(w_opts != 0, "k2 case3: z has no neighbor outside the pair")
                w = bits_of(w_opts)[0]
                b.add(w3, [w])
                b.add(u, [w3])
                b.add(v, [u, w3])
                added = (norm_edge(w3, w),) + _clique_edges((u, v, w3))
            else:
                w = bits_of(b.adj_mask(w3))[0]
                adj_u, adj_v = g.has_edge(w, u), g.has_edge(w, v)
                invariant(adj_u != adj_v, "k2 case3: witness adjacent to both/neither")
                xx, yy = (u, v) if adj_u else (v, u)
                b.add(xx, [w, w3])
                b.add(yy, [xx, w3])
                added = (norm_edge(xx, w),) + _clique_edges((u, v, w3))
            steps = [TraceStep("k2-case3-single-triangle", (u, v), added)] \
                + lift_trace(subtrace, vmap)
            return b.subgraph(), steps

    # Case 4: delete the minimum-degree anchor vertex
    xx = min(anchor, key=lambda t: (degs[t], t))
    yy, zz = sorted(t for t in anchor if t != xx)
    d = degs[xx]
    invariant(3 * d <= gval - 1, "k2 case4: 3d bound")
    w_opts = common_neighborhood_mask(g, [yy, zz]) & ~(1 << xx)
    invariant(w_opts != 0, "k2 case4: no second common neighbor")
    w = bits_of(w_opts)[0]
    gi, vmap = g.induced_complement([xx])
    invariant(gi.m == m - d, "k2 case4 edge count")
    invariant(gi.m >= turan_number(2, n - 1) + 1, "k2 case4 threshold (lemma)")
    invariant(g2(n - 1, m - d) >= gval - 2, "k2 case4 g2 drop (lemma)")
    inv = _inverse_map(vmap)
    sub, subtrace = _k2(gi, tuple(sorted((inv[yy], inv[zz], inv[w]))))
    b = ChordalBuilder(g)
    b.replay(sub.cert, vmap)
    b.add(xx, [yy, zz])
    steps = [TraceStep("k2-case4-delete-min", (xx,),
                       (norm_edge(xx, yy), norm_edge(xx, zz)))] \
        + lift_trace(subtrace, vmap)
    return b.subgraph(), steps


# ----------------------------------------------------------------------
# k = 3
# ----------------------------------------------------------------------

def dirac_diamond(g: Graph) -> Optional[tuple[tuple[int, int, int], int, int]]:
    """Two 4-cliques sharing 3 vertices: smallest (triangle, u, v), or None.

    Guaranteed to exist when n >= 5 and m >= t_3(n)+1.
    """
    for i in range(g.n):
        ai = g.adj_mask(i) & ~((1 << (i + 1)) - 1)
        for j in bits_of(ai):
            common_ij = g.adj_mask(i) & g.adj_mask(j)
            for k in bits_of(common_ij & ~((1 << (j + 1)) - 1)):
                cn = common_ij & g.adj_mask(k) & ~mask_of((i, j, k))
                if cn.bit_count() >= 2:
                    uv = bits_of(cn)[:2]
                    return (i, j, k), uv[0], uv[1]
    return None


def extract_k3(g: Graph, anchor) -> ExtractionReport:
    """Chordal subgraph with >= g3(n)-6 edges containing the anchor 4-clique.

    The theorem is stated at m = t_3(n)+1 exactly; richer inputs are first
    trimmed by deleting lexicographically-smallest non-anchor edges.
    """
    verts = _normalize_anchor(g, anchor, 4)
    n = g.n
    target = turan_number(3, n) + 1
    if g.m < target:
        raise ExtractionInputError(f"extract_k3 needs m >= t_3(n)+1 = {target}")
    _bump_recursion(n)
    t0 = time.perf_counter()
    trace: list[TraceStep] = []
    work = g
    if g.m > target:
        work, removed = _trim_to(g, target, set(_clique_edges(verts)))
        trace.append(TraceStep("k3-trim-surplus", (), (), removed))
    sub, subtrace = _k3(work, verts)
    trace.extend(subtrace)
    guarantee = g3(n) - 6
    _check_result(sub, verts, guarantee, "k3")
    return ExtractionReport("k3", g.n, g.m, verts, sub, sub.m, guarantee,
                            tuple(trace), time.perf_counter() - t0)


def _trim_to(g: Graph, target: int, protect: set[tuple[int, int]]
             ) -> tuple[Graph, tuple[tuple[int, int], ...]]:
    surplus = g.m - target
    drop = []
    for e in g.edges():
        if len(drop) == surplus:
            break
        if e not in protect:
            drop.append(e)
    invariant(len(drop) == surplus, "not enough non-protected edges to trim")
    return g.delete_edges(drop), tuple(drop)


def _k3_recurse_anchor(g: Graph, anchor: tuple[int, ...]
                       ) -> tuple[ChordalSubgraph, list[TraceStep]]:
    """Recursive entry with a specified anchor; trims surplus edges first."""
    target = turan_number(3, g.n) + 1
    invariant(g.m >= target, "k3 recursion below edge threshold")
    steps: list[TraceStep] = []
    if g.m > target:
        g, removed = _trim_to(g, target, set(_clique_edges(anchor)))
        steps.append(TraceStep("k3-trim-surplus", (), (), removed))
    sub, subtrace = _k3(g, anchor)
    return sub, steps + subtrace


def _k3_recurse_free(g: Graph) -> tuple[ChordalSubgraph, list[TraceStep],
                                        tuple[int, ...]]:
    """Recursive entry choosing its own anchor after trimming."""
    target = turan_number(3, g.n) + 1
    invariant(g.m >= target, "k3 recursion below edge threshold")
    steps: list[TraceStep] = []
    if g.m > target:
        g, removed = _trim_to(g, target, set())
        steps.append(TraceStep("k3-trim-surplus", (), (), removed))
    clique = find_clique(g, 4)
    invariant(clique is not None, "k3: no 4-clique above the Turan threshold")
    anchor = tuple(clique)
    sub, subtrace = _k3(g, anchor)
    return sub, steps + subtrace, anchor


def _k3(g: Graph, anchor: tuple[int, ...]) -> tuple[ChordalSubgraph, list[TraceStep]]:
    n, m = g.n, g.m
    invariant(m == turan_number(3, n) + 1, "k3 invoked off the exact threshold")
    if n <= 4:
        # the only 4-vertex instance is K4 itself
        opt = max_chordal_subgraph(g)
        sub = opt.witness
        _check_result(sub, anchor, g3(n) - 6, "k3-base")
        return sub, [TraceStep("k3-base-oracle", (), sub.edges)]

    sub, trace = _k3_main(g, anchor)
    _check_result(sub, anchor, g3(n) - 6, "k3-level")
    return sub, trace


def _x_adj(g: Graph, v: int, xs: Sequence[int]) -> tuple[int, ...]:
    return tuple(x for x in xs if g.has_edge(v, x))


def _k3_main(g: Graph, anchor: tuple[int, ...]) -> tuple[ChordalSubgraph, list[TraceStep]]:
    n = g.n
    X = tuple(sorted(anchor))
    xmask = mask_of(X)
    two3 = (2 * n) // 3
    dsum = sum(g.degree(x) for x in X)

    # -- degenerate case 0: nobody outside sees 3+ anchor vertices ------
    y3 = [v for v in range(n) if not (xmask >> v & 1)
          and len(_x_adj(g, v, X)) >= 3]
    if not y3:
        return _k3_deg0(g, X)

    # -- degenerate case: a high-degree x_i without a 2+-witness --------
    for xi in X:
        if g.degree(xi) >= two3 + 1:
            others = tuple(x for x in X if x != xi)
            witness = [v for v in range(n) if not (xmask >> v & 1)
                       and g.has_edge(v, xi) and len(_x_adj(g, v, others)) >= 2]
            if not witness:
                return _k3_degcase(g, X, xi)

    # -- deletable vertex ------------------------------------------------
    for xi in X:
        if g.degree(xi) <= two3:
            others = [x for x in X if x != xi]
            ys = common_neighborhood_mask(g, others) & ~xmask
            if ys:
                return _k3_deletable(g, X, xi, bits_of(ys)[0])

    # -- clique star -------------------------------------------------------
    if dsum >= g3(n):
        sub = star_union(g, X)
        return sub, [TraceStep("k3-clique-star", (), sub.edges)]

    # no 5-clique can contain X now (else some x_i deletable or star fires)
    invariant(common_neighborhood_mask(g, X) == 0,
              "k3: 5-clique through the anchor survived the claims")

    # -- xi-degree: three anchor vertices too heavy -----------------------
    for xi in X:
        if dsum - g.degree(xi) >= 2 * n + 1:
            return _k3_xidegree(g, X, xi)

    return _k3_mainline(g, X)


def _k3_deg0(g: Graph, X: tuple[int, ...]) -> tuple[ChordalSubgraph, list[TraceStep]]:
    n = g.n
    xmask = mask_of(X)
    outside = [v for v in range(n) if not (xmask >> v & 1)]
    byj: dict[int, list[int]] = {0: [], 1: [], 2: []}
    for v in outside:
        byj[len(_x_adj(g, v, X))].append(v)
    a0, a2 = len(byj[0]), len(byj[2])
    dsum = sum(g.degree(x) for x in X)
    invariant(dsum == n + 8 + a2 - a0, "k3 deg0 degree identity")

    if 0 < a2 <= n - 5:
        # Case 1: delete x2,x3,x4, isolate x1; reattach through z in A2
        z = byj[2][0]
        x1, x2 = _x_adj(g, z, X)
        x3, x4 = sorted(x for x in X if x not in (x1, x2))
        invariant(dsum <= 2 * n + 3, "k3 deg0 case1 degree bound")
        gi, vmap = g.induced_complement([x2, x3, x4])
        inv = _inverse_map(vmap)
        x1l, zl = inv[x1], inv[z]
        gi = gi.delete_edges([(x1l, w) for w in gi.neighbors(x1l)])
        invariant(gi.m >= turan_number(3, n - 3) + 1, "k3 deg0 case1 threshold")
        invariant(n - 3 >= 4, "k3 deg0 case1 size")
        sub, subtrace, _ = _k3_recurse_free(gi)
        b = ChordalBuilder(g)
        b.replay(sub.cert, vmap)
        b.add(x1, [z])
        b.add(x2, [x1, z])
        b.add(x3, [x1, x2])
        b.add(x4, [x1, x2, x3])
        added = (norm_edge(x1, z), norm_edge(x2, z)) + _clique_edges(X)
        steps = [TraceStep("k3-deg0-case1", (x2, x3, x4), added)] \
            + lift_trace(subtrace, vmap)
        return b.subgraph(), steps

    if a2 == n - 4:
        # Case 2: every outside vertex sees exactly two anchor vertices
        invariant(a0 == 0 and len(byj[1]) == 0 and dsum == 2 * n + 4,
                  "k3 deg0 case2 shape")
        v = outside[0]
        x1 = _x_adj(g, v, X)[0]
        x2, x3, x4 = sorted(x for x in X if x != x1)
        gi, vmap = g.induced_complement([x2, x3, x4])
        inv = _inverse_map(vmap)
        x1l, vl = inv[x1], inv[v]
        gi = gi.delete_edges([(x1l, w) for w in gi.neighbors(x1l) if w != vl])
        invariant(gi.m == turan_number(3, n - 3) + 1, "k3 deg0 case2 exact count")
        yclique = find_clique(gi, 4)
        invariant(yclique is not None, "k3 deg0 case2: no 4-clique")
        sub, subtrace = _k3(gi, tuple(yclique))
        b = ChordalBuilder(g)
        b.replay(sub.cert, vmap)
        ys = sorted(vmap[w] for w in yclique)
        xnb = {w: _x_adj(g, w, X) for w in ys}
        found = None
        for i in range(4):
            for j in range(i + 1, 4):
                shared = sorted(set(xnb[ys[i]]) & set(xnb[ys[j]]))
                if shared:
                    found = (ys[i], ys[j], shared[0])
                    break
            if found:
                break
        invariant(found is not None, "k3 deg0 case2: pigeonhole pair missing")
        y1, y2, xk = found
        xl = next(x for x in xnb[y1] if x != xk)
        removed = ()
        if b.has_edge(x1, v):
            b.remove_leaf_edge(x1, v)
            removed = (norm_edge(x1, v),)
        b.add(xk, [y1, y2])
        b.add(xl, [xk, y1])
        rest = sorted(x for x in X if x not in (xk, xl))
        b.add(rest[0], [xk, xl])
        b.add(rest[1], [xk, xl, rest[0]])
        added = (norm_edge(xk, y1), norm_edge(xk, y2), norm_edge(xl, y1)) \
            + _clique_edges(X)
        steps = [TraceStep("k3-deg0-case2", (x2, x3, x4), added, removed)] \
            + lift_trace(subtrace, vmap)
        return b.subgraph(), steps

    # Case 3: a2 == 0; use a Dirac diamond in the reduced graph
    invariant(a2 == 0, "k3 deg0 case3 reached with a2 != 0")
    invariant(dsum <= n + 8, "k3 deg0 case3 degree bound")
    invariant(n >= 8, "k3 deg0 case3 needs n >= 8")
    x1, x2, x3, x4 = X
    gi, vmap = g.induced_complement([x2, x3, x4])
    inv = _inverse_map(vmap)
    x1l = inv[x1]
    gi = gi.delete_edges([(x1l, w) for w in gi.neighbors(x1l)])
    invariant(gi.m >= turan_number(3, n - 3) + 1 + (n - 5),
              "k3 deg0 case3 edge slack")
    dia = dirac_diamond(gi)
    invariant(dia is not None, "k3 deg0 case3: no diamond")
    tri, v1l, v2l = dia
    gi2 = gi.delete_edges([(v1l, w) for w in gi.neighbors(v1l)])
    invariant(gi2.m >= turan_number(3, n - 3) + 1, "k3 deg0 case3 threshold")
    sub, subtrace = _k3_recurse_anchor(gi2, tuple(sorted((v2l, *tri))))
    b = ChordalBuilder(g)
    b.replay(sub.cert, vmap)
    v1 = vmap[v1l]
    w_host = sorted(vmap[w] for w in tri)
    b.add(v1, w_host)
    b.add(x2, [x1])
    b.add(x3, [x1, x2])
    b.add(x4, [x1, x2, x3])
    added = tuple(norm_edge(v1, w) for w in w_host) + _clique_edges(X)
    steps = [TraceStep("k3-deg0-case3", (x2, x3, x4), added)] \
        + lift_trace(subtrace, vmap)
    return b.subgraph(), steps


def _k3_degcase(g: Graph, X: tuple[int, ...], xi: int
                ) -> tuple[ChordalSubgraph, list[TraceStep]]:
    """d(xi) is large but no outside vertex sees xi plus two other anchors."""
    n = g.n
    x1 = xi
    rest = tuple(sorted(x for x in X if x != xi))
    ground = [v for v in range(n) if v not in rest]
    byj: dict[int, list[int]] = {0: [], 1: [], 2: [], 3: []}
    for v in ground:
        byj[len(_x_adj(g, v, rest))].append(v)
    a0, a3 = len(byj[0]), len(byj[3])
    invariant(x1 in byj[3], "k3 degcase: x1 must see all of rest")
    a3ex = [v for v in byj[3] if v != x1]
    invariant(a3ex, "k3 degcase: A3 has only x1")

    if a0 == 0:
        cands = sorted(byj[1] + byj[2])
        invariant(cands, "k3 degcase: A1 and A2 both empty")
        v = cands[0]
        x4 = _x_adj(g, v, rest)[0]
        x2, x3 = sorted(x for x in rest if x != x4)
        banned = set(byj[3]) | {x2, x3, v}
        F = [(x4, w) for w in g.neighbors(x4) if w not in banned]
        invariant(len(F) == g.degree(x4) - a3 - 3, "k3 degcase F count (a0=0)")
    else:
        v = None
        x2, x3, x4 = rest
        banned = set(byj[3]) | {x2, x3}
        F = [(x4, w) for w in g.neighbors(x4) if w not in banned]
        invariant(len(F) == g.degree(x4) - a3 - 2, "k3 degcase F count (a0>=1)")
    invariant(len(F) <= g.degree(x4) - a3 - 3 + a0, "k3 degcase F bound")
    deleted = g.degree(x1) + g.degree(x2) + g.degree(x3) - 3 + len(F)
    invariant(deleted <= 2 * n - 3, "k3 degcase deletion bound")

    gi, vmap = g.induced_complement([x1, x2, x3])
    inv = _inverse_map(vmap)
    for u, w in F:
        invariant(u not in (x1, x2, x3) and w not in (x1, x2, x3),
                  "k3 degcase: F touches a deleted vertex")
    gi = gi.delete_edges([(inv[u], inv[w]) for u, w in F])
    invariant(gi.m >= turan_number(3, n - 3) + 1, "k3 degcase threshold")
    sub, subtrace, _ = _k3_recurse_free(gi)
    b = ChordalBuilder(g)
    b.replay(sub.cert, vmap)
    removed = ()
    z = next((c for c in sorted(a3ex) if b.has_edge(x4, c)), None)
    if z is None:
        z = sorted(a3ex)[0]
        if b.degree(x4) > 0:
            invariant(a0 == 0 and v is not None and b.has_edge(x4, v)
                      and b.degree(x4) == 1,
                      "k3 degcase: unexpected H' neighbor of x4")
            b.remove_leaf_edge(x4, v)
            removed = (norm_edge(x4, v),)
        b.add(x4, [z])
    b.add(x2, [x4, z])
    b.add(x3, [x2, x4, z])
    b.add(x1, [x2, x3, x4])
    added = (norm_edge(x2, z), norm_edge(x3, z)) + _clique_edges(X)
    steps = [TraceStep("k3-degcase", (x1, x2, x3), added, removed)] \
        + lift_trace(subtrace, vmap)
    return b.subgraph(), steps


def _k3_deletable(g: Graph, X: tuple[int, ...], xi: int, y: int
                  ) -> tuple[ChordalSubgraph, list[TraceStep]]:
    n = g.n
    others = sorted(x for x in X if x != xi)
    gi, vmap = g.induced_complement([xi])
    invariant(gi.m >= turan_number(3, n - 1) + 1, "k3 deletable threshold")
    inv = _inverse_map(vmap)
    anchor2 = tuple(sorted(inv[t] for t in others + [y]))
    sub, subtrace = _k3_recurse_anchor(gi, anchor2)
    b = ChordalBuilder(g)
    b.replay(sub.cert, vmap)
    b.add(xi, others)
    added = tuple(norm_edge(xi, t) for t in others)
    steps = [TraceStep("k3-deletable", (xi,), added)] + lift_trace(subtrace, vmap)
    return b.subgraph(), steps


def _k3_xidegree(g: Graph, X: tuple[int, ...], xi: int
                 ) -> tuple[ChordalSubgraph, list[TraceStep]]:
    """Three anchor vertices have degree sum >= 2n+1; delete all of X."""
    n = g.n
    trio = sorted(x for x in X if x != xi)
    two3 = (2 * n) // 3
    invariant(g.degree(xi) <= two3, "k3 xidegree: x4 degree bound")
    cn = common_neighborhood_mask(g, trio)
    invariant(cn == 1 << xi, "k3 xidegree: trio has an extra common neighbor")
    xmask = mask_of(X)
    for v in range(n):
        if not (xmask >> v & 1):
            invariant(len(_x_adj(g, v, trio)) == 2,
                      "k3 xidegree: outside vertex not seeing exactly 2")
    gi, vmap = g.induced_complement(list(X))
    invariant(gi.m >= turan_number(3, n - 4) + 1, "k3 xidegree threshold")
    invariant(n - 4 >= 4, "k3 xidegree size")
    sub, subtrace, anchor_l = _k3_recurse_free(gi)
    ws = sorted(vmap[w] for w in anchor_l)
    xnb = {w: set(_x_adj(g, w, trio)) for w in ws}
    found = None
    for i in range(4):
        for j in range(i + 1, 4):
            if xnb[ws[i]] == xnb[ws[j]]:
                found = (ws[i], ws[j])
                break
        if found:
            break
    invariant(found is not None, "k3 xidegree: pigeonhole pair missing")
    w1, w2 = found
    x1r, x2r = sorted(xnb[w1])
    x3r = next(x for x in trio if x not in (x1r, x2r))
    w3, w4 = sorted(w for w in ws if w not in (w1, w2))
    if x1r not in xnb[w3]:
        invariant(x2r in xnb[w3], "k3 xidegree: w3 misses both shared anchors")
        x1r, x2r = x2r, x1r
    b = ChordalBuilder(g)
    b.replay(sub.cert, vmap)
    b.add(x1r, [w1, w2, w3])
    b.add(x2r, [x1r, w1, w2])
    b.add(x3r, [x1r, x2r])
    b.add(xi, [x1r, x2r, x3r])
    added = (norm_edge(x1r, w1), norm_edge(x1r, w2), norm_edge(x1r, w3),
             norm_edge(x2r, w1), norm_edge(x2r, w2)) + _clique_edges(X)
    steps = [TraceStep("k3-xidegree", tuple(X), added)] + lift_trace(subtrace, vmap)
    return b.subgraph(), steps


def _k3_mainline(g: Graph, X: tuple[int, ...]) -> tuple[ChordalSubgraph, list[TraceStep]]:
    n = g.n
    xmask = mask_of(X)
    two3 = (2 * n) // 3

    y0 = next((v for v in range(n) if not (xmask >> v & 1)
               and len(_x_adj(g, v, X)) >= 3), None)
    invariant(y0 is not None, "k3 mainline: y0 vanished after claim deg0")
    y0adj = _x_adj(g, y0, X)
    invariant(len(y0adj) == 3, "k3 mainline: y0 adjacent to all of X (K5)")
    x1 = next(x for x in X if x not in y0adj)
    invariant(g.degree(x1) >= two3 + 1, "k3 mainline: x1 not heavy")

    others = tuple(sorted(x for x in X if x != x1))
    z0 = next((v for v in range(n) if not (xmask >> v & 1)
               and g.has_edge(v, x1) and len(_x_adj(g, v, others)) >= 2), None)
    invariant(z0 is not None, "k3 mainline: z0 missing after claim degcase")
    z0adj = _x_adj(g, z0, others)
    invariant(len(z0adj) == 2, "k3 mainline: z0 would complete a K5")
    x3, x4 = sorted(z0adj)
    x2 = next(x for x in others if x not in z0adj)
    invariant(g.degree(x2) >= two3 + 1, "k3 mainline: x2 not heavy")
    invariant(y0 != z0, "k3 mainline: y0 == z0")
    invariant(g.degree(x3) <= two3 and g.degree(x4) <= two3,
              "k3 mainline: x3/x4 degree bound")

    if g.degree(y0) <= two3:
        gi, vmap = g.induced_complement([y0])
        invariant(gi.m >= turan_number(3, n - 1) + 1, "k3 mainline y0 threshold")
        inv = _inverse_map(vmap)
        sub, subtrace = _k3_recurse_anchor(gi, tuple(sorted(inv[x] for x in X)))
        b = ChordalBuilder(g)
        b.replay(sub.cert, vmap)
        b.add(y0, [x2, x3, x4])
        added = tuple(norm_edge(y0, t) for t in (x2, x3, x4))
        steps = [TraceStep("k3-main-delete-y0", (y0,), added)] \
            + lift_trace(subtrace, vmap)
        return b.subgraph(), steps

    v_opts = common_neighborhood_mask(g, [x2, y0]) & ~mask_of([x3, x4])
    invariant(v_opts != 0, "k3 mainline: no v outside x3,x4")
    v = bits_of(v_opts)[0]
    invariant(v != x1 and v != z0, "k3 mainline: v collided with x1/z0")

    w_opts = common_neighborhood_mask(g, [x2, y0, v])
    if not w_opts:
        # delete x2, y0, v; anchor on x1,x3,x4,z0
        dsum3 = g.degree(x2) + g.degree(y0) + g.degree(v)
        invariant(dsum3 <= 2 * n, "k3 mainline caseA degree bound")
        gi, vmap = g.induced_complement([x2, y0, v])
        invariant(gi.m >= turan_number(3, n - 3) + 1, "k3 mainline caseA threshold")
        inv = _inverse_map(vmap)
        anchor2 = tuple(sorted(inv[t] for t in (x1, x3, x4, z0)))
        sub, subtrace = _k3_recurse_anchor(gi, anchor2)
        b = ChordalBuilder(g)
        b.replay(sub.cert, vmap)
        b.add(x2, [x1, x3, x4])
        b.add(y0, [x2, x3, x4])
        b.add(v, [x2, y0])
        added = (norm_edge(x2, x1), norm_edge(x2, x3), norm_edge(x2, x4),
                 norm_edge(y0, x2), norm_edge(y0, x3), norm_edge(y0, x4),
                 norm_edge(v, x2), norm_edge(v, y0))
        steps = [TraceStep("k3-main-caseA", (x2, y0, v), added)] \
            + lift_trace(subtrace, vmap)
        return b.subgraph(), steps

    w = bits_of(w_opts)[0]
    if w in (x3, x4):
        if w == x4:
            x3, x4 = x4, x3
        # delete x1, x4; anchor on x2,y0,v,x3
        d14 = g.degree(x1) + g.degree(x4)
        invariant(d14 <= (4 * n) // 3, "k3 mainline caseB1 degree bound")
        gi, vmap = g.induced_complement([x1, x4])
        invariant(gi.m >= turan_number(3, n - 2) + 1, "k3 mainline caseB1 threshold")
        inv = _inverse_map(vmap)
        anchor2 = tuple(sorted(inv[t] for t in (x2, y0, v, x3)))
        sub, subtrace = _k3_recurse_anchor(gi, anchor2)
        b = ChordalBuilder(g)
        b.replay(sub.cert, vmap)
        b.add(x4, [x2, x3, y0])
        b.add(x1, [x2, x3, x4])
        added = (norm_edge(x4, x2), norm_edge(x4, x3), norm_edge(x4, y0),
                 norm_edge(x1, x2), norm_edge(x1, x3), norm_edge(x1, x4))
        steps = [TraceStep("k3-main-caseB1", (x1, x4), added)] \
            + lift_trace(subtrace, vmap)
        return b.subgraph(), steps

    # delete x1, x3, x4; anchor on x2,y0,v,w
    dsum3 = g.degree(x1) + g.degree(x3) + g.degree(x4)
    invariant(dsum3 <= 2 * n, "k3 mainline caseB2 degree bound")
    gi, vmap = g.induced_complement([x1, x3, x4])
    invariant(gi.m >= turan_number(3, n - 3) + 1, "k3 mainline caseB2 threshold")
    inv = _inverse_map(vmap)
    anchor2 = tuple(sorted(inv[t] for t in (x2, y0, v, w)))
    sub, subtrace = _k3_recurse_anchor(gi, anchor2)
    b = ChordalBuilder(g)
    b.replay(sub.cert, vmap)
    b.add(x3, [x2, y0])
    b.add(x4, [x2, x3, y0])
    b.add(x1, [x2, x3, x4])
    added = (norm_edge(x3, y0), norm_edge(x4, y0)) + _clique_edges(X)
    steps = [TraceStep("k3-main-caseB2", (x1, x3, x4), added)] \
        + lift_trace(subtrace, vmap)
    return b.subgraph(), steps
