"""Immutable dense simple graphs over vertex ids 0..n-1.

Adjacency is stored as one Python int bitmask per vertex, which keeps every
primitive (common neighbourhoods, clique tests, induced subgraphs) a handful
of machine-word operations even at the n=4096 cap. All mutation is by
constructing new Graph values, so graphs are safe to share across workers.

Tie-breaking convention used throughout the repository: smallest vertex id
first, then lexicographic on sorted tuples.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Optional, Sequence

DEFAULT_MAX_N = 4096


class GraphError(ValueError):
    """Malformed graph input: bad endpoint, duplicate edge, self-loop."""


def _iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits_of(mask: int) -> list[int]:
    """Set bits of a mask as an ascending vertex list."""
    return list(_iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Simple undirected graph; immutable after construction."""

    __slots__ = ("n", "m", "_adj")

    def __init__(self, n: int, adj: Sequence[int], m: int):
        self.n = n
        self._adj = tuple(adj)
        self.m = m

    # -- constructors -------------------------------------------------

    @staticmethod
    def from_edge_list(n: int, edges: Iterable[tuple[int, int]],
                       max_n: int = DEFAULT_MAX_N) -> "Graph":
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        if n > max_n:
            raise GraphError(f"vertex count {n} exceeds cap {max_n}")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u},{v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        return Graph(n, adj, m)

    # -- primitive queries --------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def adj_mask(self, v: int) -> int:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return bits_of(self._adj[v])

    def min_degree_vertex(self) -> int:
        return min(range(self.n), key=lambda v: (self.degree(v), v))

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u,v) with u<v, lexicographically sorted."""
        out = []
        for u in range(self.n):
            rest = self._adj[u] >> (u + 1) << (u + 1)
            for v in _iter_bits(rest):
                out.append((u, v))
        return out

    def is_clique(self, mask: int) -> bool:
        for v in _iter_bits(mask):
            if mask & ~(self._adj[v] | (1 << v)):
                return False
        return True

    # -- derived graphs ------------------------------------------------

    def delete_vertices(self, drop: Iterable[int]) -> "Graph":
        """Graph with the given vertices removed; remaining ids reindexed."""
        return self.induced_complement(drop)[0]

    def induced_complement(self, drop: Iterable[int]) -> tuple["Graph", list[int]]:
        drop_mask = mask_of(self._check_vertices(drop))
        keep = [v for v in range(self.n) if not (drop_mask >> v & 1)]
        return self._induced_from_keep(keep)

    def induced(self, keep: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph plus the map from new ids back to host ids."""
        keep_sorted = sorted(set(self._check_vertices(keep)))
        return self._induced_from_keep(keep_sorted)

    def _induced_from_keep(self, keep: list[int]) -> tuple["Graph", list[int]]:
        pos = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for i, v in enumerate(keep):
            row = 0
            for w in _iter_bits(self._adj[v]):
                j = pos.get(w)
                if j is not None:
                    row |= 1 << j
            adj[i] = row
        m = sum(r.bit_count() for r in adj) // 2
        return Graph(len(keep), adj, m), keep

    def delete_edges(self, drop: Iterable[tuple[int, int]]) -> "Graph":
        adj = list(self._adj)
        m = self.m
        for u, v in drop:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise GraphError(f"edge ({u},{v}) out of range")
            if not (adj[u] >> v & 1):
                raise GraphError(f"edge ({u},{v}) not present")
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
            m -= 1
        return Graph(self.n, adj, m)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex v renamed perm[v]."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for w in _iter_bits(self._adj[v]):
                row |= 1 << perm[w]
            adj[perm[v]] = row
        return Graph(self.n, adj, self.m)

    def _check_vertices(self, vs: Iterable[int]) -> list[int]:
        out = list(vs)
        for v in out:
            if not (0 <= v < self.n):
                raise GraphError(f"vertex {v} out of range for n={self.n}")
        return out

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- neighbourhood ops -------------------------------------------------

def common_neighborhood(g: Graph, s: Iterable[int]) -> list[int]:
    """Vertices adjacent to every member of s, excluding s itself."""
    s = list(s)
    if not s:
        raise GraphError("common_neighborhood of empty set")
    mask = common_neighborhood_mask(g, s)
    return bits_of(mask)


def common_neighborhood_mask(g: Graph, s: Iterable[int]) -> int:
    s = list(s)
    if not s:
        raise GraphError("common_neighborhood of empty set")
    mask = (1 << g.n) - 1
    for v in s:
        mask &= g.adj_mask(v)
    mask &= ~mask_of(s)
    return mask


def find_clique(g: Graph, size: int) -> Optional[list[int]]:
    """Lexicographically smallest clique of the given size, or None."""
    if size < 1:
        raise GraphError("clique size must be >= 1")
    if size > g.n:
        return None
    chosen: list[int] = []

    def grow(candidates: int, need: int) -> bool:
        if need == 0:
            return True
        if candidates.bit_count() < need:
            return False
        for v in _iter_bits(candidates):
            chosen.append(v)
            if grow(candidates & g.adj_mask(v) & ~((1 << (v + 1)) - 1), need - 1):
                return True
            chosen.pop()
        return False

    if grow((1 << g.n) - 1, size):
        return chosen
    return None


def validate(g: Graph) -> None:
    """Assert the Graph invariants (no loops, symmetry, m consistent)."""
    total = 0
    for v in range(g.n):
        row = g.adj_mask(v)
        assert not (row >> v & 1), f"self-loop at {v}"
        for w in _iter_bits(row):
            assert g.adj_mask(w) >> v & 1, f"asymmetric edge ({v},{w})"
        total += row.bit_count()
    assert total == 2 * g.m, f"edge count {g.m} inconsistent with adjacency"


# -- text formats -------------------------------------------------------

def to_edge_list_text(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def from_edge_list_text(text: str) -> Graph:
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphError("edge-list text must start with 'n m'")
    n, m = int(tokens[0]), int(tokens[1])
    vals = tokens[2:]
    if len(vals) != 2 * m:
        raise GraphError(f"expected {2 * m} endpoints, got {len(vals)}")
    edges = [(int(vals[2 * i]), int(vals[2 * i + 1])) for i in range(m)]
    return Graph.from_edge_list(n, edges)


def to_dot(g: Graph, clusters: Optional[list[tuple[str, list[int]]]] = None,
           name: str = "G") -> str:
    out = [f"graph {name} {{"]
    if clusters:
        for i, (label, verts) in enumerate(clusters):
            out.append(f"  subgraph cluster_{i} {{")
            out.append(f'    label="{label}";')
            for v in verts:
                out.append(f"    {v};")
            out.append("  }")
    else:
        for v in range(g.n):
            out.append(f"  {v};")
    for u, v in g.edges():
        out.append(f"  {u} -- {v};")
    out.append("}")
    return "\n".join(out) + "\n"
