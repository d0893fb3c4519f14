"""Simple undirected graphs plus the structural primitives everything else uses.

Vertices are dense 0-based integers.  A Graph is immutable after
construction, so it can be shared freely; twin partitions, block
separations and recognition flags are plain frozen data derived from it.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache


class Graph:
    """Immutable simple graph over vertices 0..n-1 with adjacency sets."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u].add(v)
            adj[v].add(u)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", tuple(frozenset(s) for s in adj))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def closed(self, v: int) -> frozenset:
        return self.adj[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def vertices(self) -> range:
        return range(self.n)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in sorted(self.adj[u]) if u < v]

    @property
    def m(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def induced(self, keep) -> tuple["Graph", list[int]]:
        """Subgraph induced by `keep`; returns (subgraph, old-id list)."""
        old = sorted(keep)
        pos = {v: i for i, v in enumerate(old)}
        edges = [(pos[u], pos[v]) for u in old for v in self.adj[u] if v in pos and u < v]
        return Graph(len(old), edges), old

    def complement(self) -> "Graph":
        edges = [(u, v) for u in range(self.n) for v in range(u + 1, self.n)
                 if v not in self.adj[u]]
        return Graph(self.n, edges)

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.n

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def build_graph(n: int, edges) -> Graph:
    """Build a graph from an edge list, deduplicating repeated pairs."""
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# Twins and blocks
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class TwinPartition:
    """Partition of V(G) into maximal sets of true twins (equal closed
    neighborhoods)."""

    blocks: tuple[frozenset, ...]
    block_of: tuple[int, ...]


def twin_partition(g: Graph) -> TwinPartition:
    groups: dict[frozenset, list[int]] = {}
    for v in g.vertices():
        groups.setdefault(g.closed(v), []).append(v)
    blocks = sorted((frozenset(vs) for vs in groups.values()), key=min)
    block_of = [0] * g.n
    for i, b in enumerate(blocks):
        for v in b:
            block_of[v] = i
    return TwinPartition(tuple(blocks), tuple(block_of))


# ---------------------------------------------------------------------------
# Block separations
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BlockSeparation:
    """Partition B_0..B_l of N[center]: B_0 holds the center and the vertices
    dominating it, the other parts are the twin classes (within the
    neighborhood) of the non-dominating neighbors.  Present only for block
    separable vertices."""

    center: int
    parts: tuple[frozenset, ...]

    @property
    def ell(self) -> int:
        return len(self.parts) - 1


def block_separation(g: Graph, v: int) -> BlockSeparation | None:
    """The block separation of v, or None if v is not block separable.

    v is block separable when every pair of adjacent neighbors that do not
    dominate v are twins inside the subgraph induced by N(v).
    """
    nv = g.adj[v]
    closed_v = g.closed(v)
    dominating = {w for w in nv if closed_v <= g.closed(w)}
    rest = nv - dominating
    # closed neighborhood within G[N(v)] identifies twin classes there
    key = {u: frozenset((g.adj[u] & nv) | {u}) for u in rest}
    for u in rest:
        for w in g.adj[u] & rest:
            if key[u] != key[w]:
                return None
    groups: dict[frozenset, set] = {}
    for u in rest:
        groups.setdefault(key[u], set()).add(u)
    parts = [frozenset(dominating | {v})]
    parts.extend(sorted((frozenset(s) for s in groups.values()), key=min))
    return BlockSeparation(v, tuple(parts))


# ---------------------------------------------------------------------------
# Named small patterns and induced-subgraph search
# ---------------------------------------------------------------------------

def _cycle(r):
    return Graph(r, [(i, (i + 1) % r) for i in range(r)])


def _path(r):
    return Graph(r, [(i, i + 1) for i in range(r - 1)])


def _complete(r):
    return Graph(r, [(i, j) for i in range(r) for j in range(i + 1, r)])


def _complete_bipartite(a, b):
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _wheel(r):
    g = _cycle(r)
    return Graph(r + 1, g.edges() + [(i, r) for i in range(r)])


_FIXED_PATTERNS = {
    "diamond": Graph(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
    "dart": Graph(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (0, 4)]),
    "gem": Graph(5, [(0, 1), (1, 2), (2, 3), (4, 0), (4, 1), (4, 2), (4, 3)]),
    "net": Graph(6, [(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (2, 5)]),
}


@lru_cache(maxsize=None)
def pattern_graph(name: str) -> Graph:
    """Resolve a pattern name (K3, co-K3, P4, C5, 2K2, K2,2, W4, diamond,
    dart, gem, net, ...) to its graph."""
    if name in _FIXED_PATTERNS:
        return _FIXED_PATTERNS[name]
    if name == "2K2":
        return Graph(4, [(0, 1), (2, 3)])
    if name.startswith("co-"):
        return pattern_graph(name[3:]).complement()
    m = re.fullmatch(r"K(\d+),(\d+)", name)
    if m:
        return _complete_bipartite(int(m.group(1)), int(m.group(2)))
    m = re.fullmatch(r"K(\d+)", name)
    if m:
        return _complete(int(m.group(1)))
    m = re.fullmatch(r"C(\d+)", name)
    if m and int(m.group(1)) >= 3:
        return _cycle(int(m.group(1)))
    m = re.fullmatch(r"P(\d+)", name)
    if m and int(m.group(1)) >= 1:
        return _path(int(m.group(1)))
    m = re.fullmatch(r"W(\d+)", name)
    if m and int(m.group(1)) >= 3:
        return _wheel(int(m.group(1)))
    raise ValueError(f"unknown pattern name: {name!r}")


def _find_induced(g: Graph, h: Graph):
    """Backtracking search for an induced copy of h in g; returns the matched
    vertex set or None.  Adjacency and non-adjacency must both transfer."""
    k = h.n
    if k == 0:
        return frozenset()
    if k > g.n:
        return None
    # order pattern vertices so each new one touches as many placed ones as possible
    order = [max(range(k), key=lambda v: h.degree(v))]
    placed = set(order)
    while len(order) < k:
        nxt = max((v for v in range(k) if v not in placed),
                  key=lambda v: (len(h.adj[v] & placed), h.degree(v)))
        order.append(nxt)
        placed.add(nxt)
    hdeg = [h.degree(v) for v in range(k)]

    assign: dict[int, int] = {}
    used = set()

    def extend(pos):
        if pos == k:
            return True
        pv = order[pos]
        back = [(order[i], h.has_edge(pv, order[i])) for i in range(pos)]
        anchors = [assign[q] for q, e in back if e]
        cands = g.adj[anchors[0]] if anchors else range(g.n)
        for cand in cands:
            if cand in used or g.degree(cand) < hdeg[pv]:
                continue
            if all(g.has_edge(cand, assign[q]) == e for q, e in back):
                assign[pv] = cand
                used.add(cand)
                if extend(pos + 1):
                    return True
                used.discard(cand)
                del assign[pv]
        return False

    if extend(0):
        return frozenset(assign.values())
    return None


def contains_induced(g: Graph, pattern: str | Graph):
    """Witness vertex set for an induced copy of the named pattern, else None."""
    h = pattern if isinstance(pattern, Graph) else pattern_graph(pattern)
    return _find_induced(g, h)


def is_chordal(g: Graph) -> bool:
    """Hole search up to length n; complete at desk scale."""
    for r in range(4, g.n + 1):
        if _find_induced(g, _cycle(r)) is not None:
            return False
    return True


# ---------------------------------------------------------------------------
# Class recognition
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RecognitionFlags:
    split: bool
    threshold: bool
    block: bool
    net_free_block: bool
    chordal_small: bool
    triangle_free: bool
    c4_free: bool
    diamond_free: bool
    w4_dart_gem_free: bool


def recognize(g: Graph) -> RecognitionFlags:
    """Class membership flags via forbidden-subgraph search (desk scale)."""
    free = lambda name: contains_induced(g, name) is None
    triangle_free = free("K3")
    c4_free = free("C4")
    diamond_free = free("diamond")
    no_2k2 = free("2K2")
    chordal = is_chordal(g)
    block = chordal and diamond_free
    return RecognitionFlags(
        split=no_2k2 and c4_free and free("C5"),
        threshold=no_2k2 and c4_free and free("P4"),
        block=block,
        net_free_block=block and free("net"),
        chordal_small=chordal,
        triangle_free=triangle_free,
        c4_free=c4_free,
        diamond_free=diamond_free,
        w4_dart_gem_free=free("W4") and free("dart") and free("gem"),
    )
