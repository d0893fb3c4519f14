"""Threshold graphs via (Q, S) representations.

A representation stacks clique blocks Q_1..Q_{r+1} and independent sets
S_1..S_r; Q_i is complete to S_j and Q_{j+1} for j >= i.  Canonical form
keeps every entry positive, which makes the representation unique per
graph: a zero s_i would merge adjacent Q-blocks into twins and a zero q_i
would drop its index.  The star chromatic and choice numbers coincide here
and are read off the k-forbidden indices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .solve import ListAssignment, rainbow_assignment
from .verify import Coloring


@dataclass(frozen=True)
class ThresholdRep:
    q: tuple[int, ...]
    s: tuple[int, ...]

    def __post_init__(self):
        if len(self.q) != len(self.s) + 1:
            raise ValueError("need |Q| = |S| + 1")
        if any(x < 1 for x in self.q) or any(x < 1 for x in self.s):
            raise ValueError("canonical representation requires positive entries")

    @property
    def r(self) -> int:
        return len(self.s)

    @property
    def total_vertices(self) -> int:
        return sum(self.q) + sum(self.s)


def threshold_graph(rep: ThresholdRep) -> tuple[Graph, dict]:
    """Build G(Q, S) with a role map vertex -> ('Q'|'S', index) (1-based)."""
    roles = {}
    q_blocks, s_blocks = [], []
    nxt = 0
    for i, size in enumerate(rep.q, start=1):
        block = list(range(nxt, nxt + size))
        nxt += size
        q_blocks.append(block)
        for v in block:
            roles[v] = ("Q", i)
    for i, size in enumerate(rep.s, start=1):
        block = list(range(nxt, nxt + size))
        nxt += size
        s_blocks.append(block)
        for v in block:
            roles[v] = ("S", i)
    edges = []
    r = rep.r
    for i in range(1, r + 2):
        for j in range(i, r + 1):
            # Q_i complete to S_j and to Q_{j+1}
            edges.extend((u, w) for u in q_blocks[i - 1] for w in s_blocks[j - 1])
            edges.extend((u, w) for u in q_blocks[i - 1] for w in q_blocks[j])
        block = q_blocks[i - 1]
        edges.extend((block[a], block[b])
                     for a in range(len(block)) for b in range(a + 1, len(block)))
    return Graph(nxt, edges), roles


def extract_threshold(g: Graph) -> ThresholdRep | None:
    """Canonical representation of a connected threshold graph, else None.

    Peels universal batches (the Q blocks) alternating with isolated batches
    (the S blocks); an edgeless remainder splits into S_r plus a single
    Q_{r+1} vertex, which is the one interchangeable choice and is fixed
    here to keep extraction canonical.
    """
    if not g.is_connected():
        raise ValueError("extract_threshold requires a connected graph")
    alive = set(g.vertices())
    deg = {v: g.degree(v) for v in alive}

    def remove(batch):
        for v in batch:
            alive.discard(v)
        for v in batch:
            for w in g.adj[v]:
                if w in alive:
                    deg[w] -= 1

    qs: list[int] = []
    ss: list[int] = []
    while alive:
        universal = {v for v in alive if deg[v] == len(alive) - 1}
        if not universal:
            return None
        if universal == alive:
            qs.append(len(universal))
            break
        remove(universal)
        qs.append(len(universal))
        isolated = {v for v in alive if deg[v] == 0}
        if not isolated:
            return None
        if isolated == alive:
            ss.append(len(isolated) - 1)
            qs.append(1)
            alive.clear()
            break
        remove(isolated)
        ss.append(len(isolated))
    return ThresholdRep(tuple(qs), tuple(ss))


# ---------------------------------------------------------------------------
# k-forbidden indices and the chromatic number
# ---------------------------------------------------------------------------

def k_forbidden_index(rep: ThresholdRep, k: int):
    """Smallest k-forbidden index of Q (1-based), or None.

    Index i is k-forbidden when q_i > k, or q_i = k and some j > i has
    q_j = k with only (k-1)-entries of Q strictly between and only
    1-entries of S in [i, j).
    """
    q, s, r = rep.q, rep.s, rep.r
    # reach[i]: a suitable j > i exists, assuming q_i = k (1-based index i <= r)
    reach = [False] * (r + 2)
    for i in range(r, 0, -1):
        if s[i - 1] != 1:
            continue
        if q[i] == k:
            reach[i] = True
        elif q[i] == k - 1 and i + 1 <= r and reach[i + 1]:
            reach[i] = True
    for i in range(1, r + 2):
        if q[i - 1] > k:
            return i
        if q[i - 1] == k and i <= r and reach[i]:
            return i
    return None


def star_chromatic_threshold(rep: ThresholdRep) -> tuple[int, Coloring]:
    """Star chromatic number of G(Q, S) (equal to the choice number) plus a
    witness coloring built from the constructive rules.

    One color suffices only for K_1; any larger connected threshold graph
    has a maximal star, so the search floor is 2 (the theorem's machinery
    assumes k >= 2 throughout).
    """
    k = max(rep.q)
    if rep.total_vertices >= 2:
        k = max(k, 2)
    if k_forbidden_index(rep, k) is not None:
        k += 1
    n = rep.total_vertices
    lists = ListAssignment(k, tuple(frozenset(range(1, k + 1)) for _ in range(n)))
    return k, color_threshold(rep, lists, k)


def color_threshold(rep: ThresholdRep, lists: ListAssignment, k: int) -> Coloring:
    """Star L-coloring of G(Q, S) for uniform k-lists when no index is
    k-forbidden.

    Processes indices in ascending order: Q_i is colored rainbow avoiding
    the already-colored w_{p(i)} where required, then w_i (the designated
    vertex of S_i) avoiding rho(Q_i) and, for small blocks, rho(w_{p(i)}),
    then the rest of S_i with one vertex forced away from w_i.  Feasibility
    of every step follows from the absence of k-forbidden indices and is
    asserted, not assumed.
    """
    if lists.k != k:
        raise ValueError("uniform k-lists required")
    if k_forbidden_index(rep, k) is not None:
        raise ValueError(f"a {k}-forbidden index is present; graph not colorable")
    g, roles = threshold_graph(rep)
    if len(lists.lists) != g.n:
        raise ValueError("list assignment does not cover the graph")
    q, s, r = rep.q, rep.s, rep.r
    q_block = {i: [] for i in range(1, r + 2)}
    s_block = {i: [] for i in range(1, r + 1)}
    for v, (kind, i) in roles.items():
        (q_block if kind == "Q" else s_block)[i].append(v)

    # p(i): minimum index with every entry of Q(p(i), i] at most k-1
    p = {}
    last_big = 0
    for i in range(1, r + 2):
        if q[i - 1] >= k:
            last_big = i
        p[i] = max(1, last_big)

    colors = {}
    w = {i: min(s_block[i]) for i in range(1, r + 1)}
    for i in range(1, r + 2):
        qi = q[i - 1]
        avoid = set()
        # small blocks avoid the designated vertex of S_{p(i)}; for i = 1 the
        # same constraint lands on w_1 itself below
        if qi < k and p[i] < i:
            avoid.add(colors[w[p[i]]])
        allowed = {v: lists.lists[v] - avoid for v in q_block[i]}
        assignment = rainbow_assignment(q_block[i], allowed)
        assert assignment is not None, "rainbow step infeasible for valid k-lists"
        colors.update(assignment)
        if i == r + 1:
            break
        block_colors = {colors[v] for v in q_block[i]}
        wi = w[i]
        avoid_w = set()
        if qi < k:
            avoid_w |= block_colors
        if qi < k - 1 and 1 < i:
            avoid_w.add(colors[w[p[i]]])
        choices = sorted(lists.lists[wi] - avoid_w)
        assert choices, "w-step infeasible for valid k-lists"
        colors[wi] = choices[0]
        rest = sorted(set(s_block[i]) - {wi})
        if rest and s[i - 1] > 1:
            other = rest[0]
            alt = sorted(lists.lists[other] - {colors[wi]})
            assert alt, "rule-4 step infeasible for valid k-lists"
            colors[other] = alt[0]
            rest = rest[1:]
        for v in rest:
            colors[v] = min(lists.lists[v])
    palette = max(max(colors.values()), k)
    return Coloring(palette, tuple(colors[v] for v in range(g.n)))


# ---------------------------------------------------------------------------
# Closed-form maximal stars
# ---------------------------------------------------------------------------

def maximal_stars_threshold(rep: ThresholdRep):
    """Maximal stars of G(Q, S) from the closed form: center v in Q_i, one
    leaf w in Q_j (j >= i) plus all of S_i..S_{j-1}.  Returns the same set
    as the generic enumerator on the built graph."""
    from .enumeration import make_star

    g, roles = threshold_graph(rep)
    r = rep.r
    q_block = {i: [] for i in range(1, r + 2)}
    s_block = {i: [] for i in range(1, r + 1)}
    for v, (kind, i) in roles.items():
        (q_block if kind == "Q" else s_block)[i].append(v)
    out = {}
    for i in range(1, r + 2):
        for j in range(i, r + 2):
            mids = [u for h in range(i, j) for u in s_block[h]]
            for v in q_block[i]:
                for w in q_block[j]:
                    if v == w:
                        continue
                    star = make_star(g, v, frozenset(mids) | {w})
                    out[star.vertices] = star
    return set(out.values())
