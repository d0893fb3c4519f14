"""Enumeration of maximal stars and maximal bicliques.

A star is a biclique K_{1,m} inside the closed neighborhood of its center;
maximality is by vertex-set containment within the same family (a maximal
star may well be non-maximal as a biclique).  All enumerators emit
canonical objects exactly once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph


class CapExceeded(Exception):
    """An input exceeded a configured desk-scale cap."""


DEFAULT_BICLIQUE_CAP = 20


@dataclass(frozen=True)
class Star:
    """Center plus a nonempty independent leaf set inside N(center).

    For two-vertex stars (twin pairs) either endpoint is a center; the
    canonical form stores the smaller id.
    """

    center: int
    leaves: frozenset

    @property
    def vertices(self) -> frozenset:
        return self.leaves | {self.center}

    def __lt__(self, other):  # stable output ordering
        return (self.center, sorted(self.leaves)) < (other.center, sorted(other.leaves))


@dataclass(frozen=True)
class Biclique:
    """Two disjoint nonempty independent sets, complete to each other.
    Canonical form stores the side with the smaller minimum id first."""

    side_s: frozenset
    side_t: frozenset

    @property
    def vertices(self) -> frozenset:
        return self.side_s | self.side_t


def make_star(g: Graph, center: int, leaves) -> Star:
    leaves = frozenset(leaves)
    if len(leaves) == 1 and center in g.adj[next(iter(leaves))]:
        other = next(iter(leaves))
        if other < center:
            center, leaves = other, frozenset({center})
    return Star(center, leaves)


def make_biclique(side_a, side_b) -> Biclique:
    a, b = frozenset(side_a), frozenset(side_b)
    if min(b) < min(a):
        a, b = b, a
    return Biclique(a, b)


def star_centers(g: Graph, vertices: frozenset) -> list[int]:
    """All valid centers of a star vertex set (two for K_{1,1})."""
    return [c for c in vertices
            if vertices - {c} <= g.adj[c]
            and _independent(g, vertices - {c})]


def _independent(g: Graph, vs) -> bool:
    vs = list(vs)
    return all(not g.has_edge(vs[i], vs[j])
               for i in range(len(vs)) for j in range(i + 1, len(vs)))


def is_star_set(g: Graph, vertices) -> bool:
    vertices = frozenset(vertices)
    return len(vertices) >= 2 and bool(star_centers(g, vertices))


def is_biclique_set(g: Graph, vertices) -> bool:
    return split_biclique(g, vertices) is not None


def split_biclique(g: Graph, vertices):
    """Bipartition (A, B) if `vertices` induces a complete bipartite graph,
    else None.  K_{n,m} is connected, so the bipartition is unique."""
    vs = frozenset(vertices)
    if len(vs) < 2:
        return None
    # 2-color by BFS; the induced subgraph must be connected
    start = min(vs)
    color = {start: 0}
    queue = [start]
    while queue:
        u = queue.pop()
        for w in g.adj[u] & vs:
            if w not in color:
                color[w] = 1 - color[u]
                queue.append(w)
            elif color[w] == color[u]:
                return None
    if len(color) != len(vs):
        return None
    a = frozenset(v for v in vs if color[v] == 0)
    b = vs - a
    if not a or not b:
        return None
    if any(w not in g.adj[v] for v in a for w in b):
        return None
    return a, b


# ---------------------------------------------------------------------------
# Maximal independent sets (Bron-Kerbosch with pivoting on non-adjacency)
# ---------------------------------------------------------------------------

def maximal_independent_sets(g: Graph, subset):
    """Yield the maximal independent subsets of `subset` within g."""
    subset = frozenset(subset)
    nonadj = {v: (subset - g.adj[v]) - {v} for v in subset}

    def expand(r, p, x):
        if not p and not x:
            yield frozenset(r)
            return
        pivot = max(p | x, key=lambda u: len(p & nonadj[u]))
        for v in sorted(p - nonadj[pivot]):
            yield from expand(r | {v}, p & nonadj[v], x & nonadj[v])
            p = p - {v}
            x = x | {v}

    if subset:
        yield from expand(frozenset(), subset, frozenset())


# ---------------------------------------------------------------------------
# Maximal stars
# ---------------------------------------------------------------------------

def _extendable_star(g: Graph, vertices) -> bool:
    """True if vertices + one more vertex still induces a star."""
    vs = frozenset(vertices)
    return any(is_star_set(g, vs | {x}) for x in range(g.n) if x not in vs)


def maximal_stars(g: Graph) -> set[Star]:
    """Exactly the maximal stars of g, canonical, each once.

    Candidates come from maximal independent sets of each neighborhood; a
    candidate can still sit inside a star of a different center (the
    K_{1,1} case), so a single-vertex extension filter runs afterwards.
    """
    seen: dict[frozenset, Star] = {}
    for v in g.vertices():
        if not g.adj[v]:
            continue
        for s in maximal_independent_sets(g, g.adj[v]):
            star = make_star(g, v, s)
            seen.setdefault(star.vertices, star)
    return {star for vs, star in seen.items() if not _extendable_star(g, vs)}


def maximal_bicliques(g: Graph, cap: int = DEFAULT_BICLIQUE_CAP) -> set[Biclique]:
    """Exactly the maximal bicliques of g by independent-set-pair enumeration;
    exponential worst case, guarded by a vertex cap."""
    if g.n > cap:
        raise CapExceeded(f"maximal_bicliques cap {cap} exceeded (n={g.n})")
    unions: dict[frozenset, Biclique] = {}

    def indep_sets(p, current):
        yield current
        for v in sorted(p):
            yield from indep_sets({u for u in p if u > v} - g.adj[v], current | {v})

    for s in indep_sets(set(g.vertices()), frozenset()):
        if not s:
            continue
        common = None
        for v in s:
            common = g.adj[v] if common is None else common & g.adj[v]
        if not common:
            continue
        for t in maximal_independent_sets(g, common):
            b = make_biclique(s, t)
            unions.setdefault(b.vertices, b)
    return {b for vs, b in unions.items()
            if not any(is_biclique_set(g, vs | {x}) for x in range(g.n) if x not in vs)}


# ---------------------------------------------------------------------------
# Split-graph fast path
# ---------------------------------------------------------------------------

def check_split_partition(g: Graph, q, s) -> None:
    q, s = frozenset(q), frozenset(s)
    if q & s or q | s != frozenset(g.vertices()):
        raise ValueError("split sides must partition the vertex set")
    if not _independent(g, s):
        raise ValueError("independent side has an edge")
    if any(not g.has_edge(u, v) for u in q for v in q if u < v):
        raise ValueError("clique side has a missing edge")


def maximal_stars_split(g: Graph, q, s) -> set[Star]:
    """Maximal stars of a split graph with declared partition (q, s), via the
    O(d(v)) closed form per center; agrees with maximal_stars."""
    q, s = frozenset(q), frozenset(s)
    check_split_partition(g, q, s)
    seen: dict[frozenset, Star] = {}
    for v in g.vertices():
        leaf_sets = []
        base = g.adj[v] & s
        if base:
            leaf_sets.append(base)
        for w in g.adj[v] & q:
            leaf_sets.append((g.adj[v] | {w}) - g.adj[w] - {v})
        for leaves in leaf_sets:
            if leaves:
                star = make_star(g, v, leaves)
                seen.setdefault(star.vertices, star)
    return {star for vs, star in seen.items() if not _extendable_star(g, vs)}
