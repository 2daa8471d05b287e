import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chordal_forge.chordality import is_chordal
from chordal_forge.constructions import turan_graph, turan_plus_edge
from chordal_forge.graph_core import Graph
from chordal_forge.oracle import (OracleCapError, f_exact, f_exact_cached,
                                  load_f_table, max_chordal_subgraph,
                                  save_f_table)

from conftest import complete_graph, cycle_graph, random_gnm


def test_max_chordal_examples(c4):
    assert max_chordal_subgraph(c4).max_edges == 3
    k33 = turan_graph(2, 6)
    assert max_chordal_subgraph(k33).max_edges == 5
    assert max_chordal_subgraph(turan_plus_edge(3, 6)).max_edges == 12


def test_max_chordal_witness_validates(c5):
    r = max_chordal_subgraph(c5)
    assert r.max_edges == 4
    w = r.witness
    assert len(w.edges) == 4
    assert is_chordal(w.to_graph()).chordal
    assert set(w.edges) <= set(c5.edges())


def test_cap_enforced():
    with pytest.raises(OracleCapError):
        max_chordal_subgraph(complete_graph(8))
    with pytest.raises(OracleCapError):
        f_exact(8, 5)


def test_equals_m_iff_chordal():
    for seed in range(120):
        g = random_gnm(6, seed % 12 + 2, seed)
        r = max_chordal_subgraph(g)
        assert (r.max_edges == g.m) == is_chordal(g).chordal


@given(st.integers(0, 10 ** 6))
@settings(max_examples=60, deadline=None)
def test_relabel_invariance(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 6)
    g = random_gnm(n, rng.randint(0, min(10, n * (n - 1) // 2)), seed)
    perm = list(range(n))
    rng.shuffle(perm)
    assert max_chordal_subgraph(g).max_edges == \
        max_chordal_subgraph(g.relabel(perm)).max_edges


def test_f_exact_examples():
    assert f_exact(4, 5).f_exact == 5
    assert f_exact(6, 10).f_exact == 8
    entry = f_exact(5, 7)
    # witness graph attains the minimum
    worst = Graph.from_edge_list(5, entry.extremal_graph)
    assert max_chordal_subgraph(worst).max_edges == entry.f_exact


def test_f_exact_monotone_in_m():
    prev = 0
    for m in range(0, 11):
        val = f_exact(5, m).f_exact
        assert val >= prev
        prev = val


def test_f_exact_pruning_matches_naive_minimum():
    # the running-minimum skip must not change the result
    from itertools import combinations

    from conftest import all_edges

    for n, m in [(4, 3), (4, 5), (5, 4), (5, 6), (5, 7)]:
        naive = min(
            max_chordal_subgraph(Graph.from_edge_list(n, edges)).max_edges
            for edges in combinations(all_edges(n), m))
        assert f_exact(n, m).f_exact == naive, (n, m)


def test_f_table_roundtrip(tmp_path):
    path = tmp_path / "table.json"
    e1 = f_exact_cached(5, 4, str(path))
    table = load_f_table(str(path))
    assert table[(5, 4)] == e1
    # cached lookup returns the stored entry without recomputation
    e2 = f_exact_cached(5, 4, str(path))
    assert e1 == e2
    save_f_table(str(path), table)
    assert load_f_table(str(path))[(5, 4)].f_exact == e1.f_exact
