"""Exact ground truth at desk scale.

max_chordal_subgraph enumerates edge subsets by descending cardinality and
returns the first chordal one (subsets in lexicographic order of the host's
sorted edge list, so results are deterministic and relabel-invariant up to
the advertised witness tie-break). f_exact takes the minimum over all m-edge
labeled graphs on n vertices. Caps keep worst cases tractable: m <= 24 per
graph, n <= 7 for the f table.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .chordality import ChordalSubgraph
from .graph_core import Graph

MAX_ORACLE_EDGES = 24
MAX_ORACLE_N = 7


class OracleCapError(ValueError):
    """Instance exceeds the configured exhaustive-search cap."""


def _simplicial_elimination(n: int, adj: list[int]) -> Optional[list[tuple[int, tuple[int, ...]]]]:
    """Eliminate simplicial vertices greedily; None if the graph is not chordal.

    Returns the (vertex, remaining-neighborhood) elimination log; reversing it
    gives a simplicial-addition certificate.
    """
    alive = (1 << n) - 1
    adj = list(adj)
    log = []
    for _ in range(n):
        picked = -1
        rest = alive
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            nb = adj[v]
            ok = True
            probe = nb
            while probe:
                lw = probe & -probe
                u = lw.bit_length() - 1
                probe ^= lw
                if nb & ~(adj[u] | lw):
                    ok = False
                    break
            if ok:
                picked = v
                break
        if picked < 0:
            return None
        nbs = adj[picked]
        log.append((picked, nbs))
        alive &= ~(1 << picked)
        while nbs:
            lw = nbs & -nbs
            u = lw.bit_length() - 1
            nbs ^= lw
            adj[u] &= ~(1 << picked)
        adj[picked] = 0
    return [(v, tuple(_mask_bits(nb))) for v, nb in log]


def _mask_bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _is_chordal_masks(n: int, adj: list[int]) -> bool:
    alive = (1 << n) - 1
    adj = list(adj)
    for _ in range(n):
        picked = -1
        rest = alive
        while rest:
            low = rest & -rest
            v = low.bit_length() - 1
            rest ^= low
            nb = adj[v]
            ok = True
            probe = nb
            while probe:
                lw = probe & -probe
                if nb & ~(adj[lw.bit_length() - 1] | lw):
                    ok = False
                    break
                probe ^= lw
            if ok:
                picked = v
                break
        if picked < 0:
            return False
        nbs = adj[picked]
        alive &= ~(1 << picked)
        while nbs:
            lw = nbs & -nbs
            adj[lw.bit_length() - 1] &= ~(1 << picked)
            nbs ^= lw
        adj[picked] = 0
    return True


@dataclass(frozen=True)
class OptimumResult:
    max_edges: int
    witness: ChordalSubgraph


def max_chordal_subgraph(g: Graph, cap: int = MAX_ORACLE_EDGES) -> OptimumResult:
    """Exact maximum chordal subgraph by descending-cardinality subset search."""
    if g.m > cap:
        raise OracleCapError(f"m={g.m} exceeds oracle cap {cap}")
    edge_list = g.edges()
    best = _max_chordal_raw(g.n, edge_list)
    assert best is not None
    c, subset = best
    adj = [0] * g.n
    for u, v in subset:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    elim = _simplicial_elimination(g.n, adj)
    assert elim is not None
    cert = tuple(("add", v, nb) for v, nb in reversed(elim) if nb)
    return OptimumResult(c, ChordalSubgraph(g.n, tuple(subset), cert))


def _max_chordal_raw(n: int, edge_list: list[tuple[int, int]],
                     floor: int = 0,
                     start: Optional[int] = None) -> Optional[tuple[int, tuple]]:
    """(size, first edge subset) of the largest chordal subset with size in
    [floor, start]; None if every chordal subset has fewer than `floor` edges."""
    m = len(edge_list)
    if start is None or start > m:
        start = m
    for c in range(start, floor - 1, -1):
        for subset in combinations(edge_list, c):
            adj = [0] * n
            for u, v in subset:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
            if _is_chordal_masks(n, adj):
                return c, subset
    return None


@dataclass(frozen=True)
class FTableEntry:
    n: int
    m: int
    f_exact: int
    extremal_graph: tuple[tuple[int, int], ...]


def f_exact(n: int, m: int, cap_n: int = MAX_ORACLE_N) -> FTableEntry:
    """min over all m-edge graphs on n labeled vertices of max_chordal_subgraph.

    Graphs whose maximum is already >= the running minimum are skipped as soon
    as a chordal subset that large is found, which does not change the result.
    """
    if n > cap_n:
        raise OracleCapError(f"n={n} exceeds f_exact cap {cap_n}")
    all_edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if not (0 <= m <= len(all_edges)):
        raise OracleCapError(f"m={m} out of range for n={n}")
    best_val: Optional[int] = None
    best_graph: Optional[tuple] = None
    for edges in combinations(all_edges, m):
        floor = 0 if best_val is None else best_val
        found = _max_chordal_raw(n, list(edges), floor=floor)
        if found is None:
            # every chordal subgraph here is smaller than the running minimum
            exact = _max_chordal_raw(n, list(edges), floor=0, start=floor - 1)
            assert exact is not None
            best_val, best_graph = exact[0], edges
        elif best_val is None:
            best_val, best_graph = found[0], edges
        elif found[0] < best_val:
            best_val, best_graph = found[0], edges
    assert best_val is not None and best_graph is not None
    return FTableEntry(n, m, best_val, tuple(best_graph))


def f_exact_range(n: int, ms: list[int]) -> list[FTableEntry]:
    return [f_exact(n, m) for m in ms]


# -- persistent table ---------------------------------------------------

def load_f_table(path: str) -> dict[tuple[int, int], FTableEntry]:
    if not os.path.exists(path):
        return {}
    with open(path) as fh:
        rows = json.load(fh)
    out = {}
    for row in rows:
        entry = FTableEntry(row["n"], row["m"], row["f"],
                            tuple(tuple(e) for e in row["witness_edges"]))
        out[(entry.n, entry.m)] = entry
    return out


def save_f_table(path: str, table: dict[tuple[int, int], FTableEntry]) -> None:
    rows = [
        {"n": e.n, "m": e.m, "f": e.f_exact,
         "witness_edges": [list(edge) for edge in e.extremal_graph]}
        for e in sorted(table.values(), key=lambda e: (e.n, e.m))
    ]
    with open(path, "w") as fh:
        json.dump(rows, fh, indent=1)
        fh.write("\n")


def f_exact_cached(n: int, m: int, path: Optional[str] = None) -> FTableEntry:
    """f_exact through the JSON table at `path` so repeated runs are incremental."""
    if path is None:
        return f_exact(n, m)
    table = load_f_table(path)
    key = (n, m)
    if key not in table:
        table[key] = f_exact(n, m)
        save_f_table(path, table)
    return table[key]
