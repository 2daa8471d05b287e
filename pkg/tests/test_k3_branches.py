"""Planted instances steering extract_k3 through every proof branch.

Random graphs essentially never satisfy the degenerate-claim hypotheses
(controlled anchor cross-degrees at the exact edge threshold), so each branch
gets a hand-built graph: anchor X = {0,1,2,3}, prescribed adjacency between
X and the outside, and lexicographic filler edges up to m = t_3(n)+1.
"""

from itertools import combinations

import pytest

from chordal_forge.bounds import g3, turan_number
from chordal_forge.chordality import ChordalBuilder, is_chordal
from chordal_forge.extract_exact import extract_k3
from chordal_forge.graph_core import Graph

X_EDGES = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def fill_to_threshold(n, edges, forbidden=frozenset()):
    m_target = turan_number(3, n) + 1
    es = set(edges)
    for u, v in combinations(range(4, n), 2):
        if len(es) >= m_target:
            break
        if (u, v) in es or (u, v) in forbidden:
            continue
        es.add((u, v))
    assert len(es) == m_target, "planted instance cannot reach the threshold"
    return Graph.from_edge_list(n, sorted(es))


def run_and_expect(g, want_label):
    anchor = (0, 1, 2, 3)
    r = extract_k3(g, anchor)
    labels = [s.label for s in r.trace]
    assert want_label in labels, (want_label, labels[:6])
    assert r.achieved >= g3(g.n) - 6
    assert is_chordal(r.subgraph.to_graph()).chordal
    b = ChordalBuilder(g)
    b.replay(r.subgraph.cert)
    assert set(b.edges()) == set(r.subgraph.edges)
    es = r.subgraph.edge_set()
    for e in X_EDGES:
        assert e in es
    return r


def test_deg0_case1():
    # nobody outside sees 3 anchors; 0 < a2 = 8 <= n-5
    n = 13
    edges = list(X_EDGES) + [(0, 4)] \
        + [(0, v) for v in range(5, 13)] + [(1, v) for v in range(5, 13)]
    out = [(u, v) for u, v in combinations(range(4, 13), 2)
           if (u, v) not in [(4, 5), (4, 6)]]
    g = Graph.from_edge_list(n, edges + out)
    assert g.m == turan_number(3, n) + 1
    run_and_expect(g, "k3-deg0-case1")


def test_deg0_case2_leaf_swap():
    # a2 = n-4: every outside vertex sees exactly two anchors; exercises the
    # remove-leaf-edge surgery on x1's single kept edge
    n = 13
    edges = list(X_EDGES) \
        + [(0, v) for v in range(4, 13)] + [(1, v) for v in range(4, 13)]
    out = [(u, v) for u, v in combinations(range(4, 13), 2)
           if (u, v) not in [(4, 5), (4, 6), (5, 6)]]
    g = Graph.from_edge_list(n, edges + out)
    assert g.m == turan_number(3, n) + 1
    r = run_and_expect(g, "k3-deg0-case2")
    assert any(s.removed for s in r.trace if s.label == "k3-deg0-case2")


def test_deg0_case3_diamond():
    # a2 = 0: anchors nearly disconnected from a dense outside block
    n = 20
    edges = list(X_EDGES) + [(0, v) for v in range(4, 12)]
    out = list(combinations(range(4, 20), 2))
    g = Graph.from_edge_list(n, edges + out)
    assert g.m == turan_number(3, n) + 1
    run_and_expect(g, "k3-deg0-case3")


def test_degenerate_case_high_degree_without_witness():
    # d(x1) heavy but no outside vertex sees x1 plus two other anchors
    n = 12
    edges = list(X_EDGES) + [(1, 4), (2, 4), (3, 4)] \
        + [(0, v) for v in range(5, 11)] \
        + [(1, 11), (2, 11), (3, 11)] + [(1, 5), (2, 6), (3, 7)]
    out = list(combinations(range(4, 12), 2))
    g = Graph.from_edge_list(n, edges + out)
    assert g.m == turan_number(3, n) + 1
    run_and_expect(g, "k3-degcase")


def test_xidegree_trio():
    # d(x1)+d(x2)+d(x3) = 2n+1 with every outside vertex seeing exactly two
    n = 15
    cross = [(0, 4), (2, 4), (1, 5), (2, 5), (3, 4), (3, 5)]
    cross += [(0, v) for v in (6, 7, 8, 9, 10)] \
        + [(1, v) for v in (6, 7, 8, 9, 10)]
    cross += [(0, 11), (2, 11), (0, 12), (2, 12)]
    cross += [(1, 13), (2, 13), (1, 14), (2, 14)]
    g = fill_to_threshold(n, X_EDGES + cross)
    run_and_expect(g, "k3-xidegree")


# shared mainline skeleton: y0 = 4 ~ {1,2,3}, z0 = 5 ~ {0,2,3}, 0 and 1 heavy
MAIN_BASE = list(X_EDGES) + [(1, 4), (2, 4), (3, 4)] + [(0, 5), (2, 5), (3, 5)]
MAIN_CROSS = [(0, v) for v in (6, 7, 8, 9, 10, 11, 12)] \
    + [(1, v) for v in (6, 7, 8, 9, 10, 11, 13)]


def test_mainline_delete_y0():
    g = fill_to_threshold(15, MAIN_BASE + MAIN_CROSS,
                          forbidden={(4, 12), (4, 13), (4, 14)})
    run_and_expect(g, "k3-main-delete-y0")


def test_mainline_case_a():
    # v = 6; cutting 6 off from N(1) leaves x2,y0,v with no common neighbor
    forb = {(6, 7), (6, 8), (6, 9), (6, 10), (6, 11), (6, 13)}
    g = fill_to_threshold(15, MAIN_BASE + MAIN_CROSS + [(2, 12)], forbidden=forb)
    run_and_expect(g, "k3-main-caseA")


def test_mainline_case_b1():
    # 6 ~ {1,2} so the common neighbor of x2,y0,v is w = 2 = x3
    cross = [(0, v) for v in (5, 7, 8, 9, 10, 11, 12, 14)] \
        + [(1, v) for v in (4, 6, 7, 8, 9, 10, 11, 13)] \
        + [(2, v) for v in (4, 5, 6)] + [(3, v) for v in (4, 5)]
    g = fill_to_threshold(15, list(X_EDGES) + cross)
    run_and_expect(g, "k3-main-caseB1")


def test_mainline_case_b2():
    # 7 ~ {1,4,6} becomes the smallest common neighbor outside {x3,x4}
    g = fill_to_threshold(15, MAIN_BASE + MAIN_CROSS)
    run_and_expect(g, "k3-main-caseB2")


def test_k2_base_triangle():
    from chordal_forge.extract_exact import extract_k2
    k3 = Graph.from_edge_list(3, [(0, 1), (0, 2), (1, 2)])
    r = extract_k2(k3, (0, 1, 2))
    assert r.achieved == 3 and r.trace[0].label == "k2-base-K3"
