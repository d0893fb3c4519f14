"""Net-free block graphs via weighted-tree representations.

G(T, K) arises from a tree T by inserting, per edge vw, a clique B(vw) of
K(vw) vertices adjacent to both v and w.  Star k-colorability reduces to
two conditions on (T, K): no edge weight above k, and every maximal
(k-1)-subtree contains a (k-1)-exit vertex.  Maximal (k-1)-subtrees here
are the components of the weight-(k-1) edge subgraph including isolated
nodes; without the singleton reading the criterion fails already on K_4
(single edge, K = k = 2), which the brute-force suite demonstrates.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .solve import ListAssignment, rainbow_assignment
from .verify import Coloring


@dataclass(frozen=True)
class NetblockRep:
    """Tree on nodes 0..t-1 with a nonnegative weight per edge; edges are
    stored with endpoints sorted."""

    nodes: int
    weights: tuple[tuple[tuple[int, int], int], ...]  # ((u, v), K(uv)) sorted

    def __post_init__(self):
        edges = [e for e, _ in self.weights]
        if len(edges) != self.nodes - 1:
            raise ValueError("a tree on t nodes has t-1 edges")
        if any(u >= v or not (0 <= u < self.nodes) or v >= self.nodes
               for u, v in edges):
            raise ValueError("edges must be sorted in-range pairs")
        if any(k < 0 for _, k in self.weights):
            raise ValueError("weights are nonnegative")
        adj = {v: set() for v in range(self.nodes)}
        seen = {0} if self.nodes else set()
        for u, v in edges:
            adj[u].add(v)
            adj[v].add(u)
        stack = [0] if self.nodes else []
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        if len(seen) != self.nodes:
            raise ValueError("tree is not connected")

    def weight(self, u: int, v: int) -> int:
        return dict(self.weights)[(min(u, v), max(u, v))]

    def tree_adj(self) -> dict[int, set]:
        adj = {v: set() for v in range(self.nodes)}
        for (u, v), _ in self.weights:
            adj[u].add(v)
            adj[v].add(u)
        return adj


def make_netblock(nodes: int, weighted_edges) -> NetblockRep:
    ws = tuple(sorted(((min(u, v), max(u, v)), k) for u, v, k in weighted_edges))
    return NetblockRep(nodes, ws)


def netblock_graph(rep: NetblockRep) -> tuple[Graph, dict]:
    """Build G(T, K) plus a role map: ('T', node) or ('B', (u, v), index)."""
    roles = {v: ("T", v) for v in range(rep.nodes)}
    nxt = rep.nodes
    edges = []
    for (u, v), k in rep.weights:
        edges.append((u, v))
        clique = list(range(nxt, nxt + k))
        nxt += k
        for idx, b in enumerate(clique):
            roles[b] = ("B", (u, v), idx)
            edges.append((u, b))
            edges.append((v, b))
        edges.extend((clique[a], clique[b])
                     for a in range(k) for b in range(a + 1, k))
    return Graph(nxt, edges), roles


# ---------------------------------------------------------------------------
# Extraction
# ---------------------------------------------------------------------------

def _biconnected_components(g: Graph):
    """Vertex sets of the biconnected components plus the cut vertices
    (iterative Hopcroft-Tarjan)."""
    disc, low = {}, {}
    comps, cuts = [], set()
    stack = []  # edge stack
    counter = [0]
    for root in g.vertices():
        if root in disc:
            continue
        work = [(root, None, iter(sorted(g.adj[root])))]
        disc[root] = low[root] = counter[0]
        counter[0] += 1
        root_children = 0
        while work:
            v, parent, it = work[-1]
            advanced = False
            for w in it:
                if w == parent:
                    continue
                if w not in disc:
                    stack.append((v, w))
                    disc[w] = low[w] = counter[0]
                    counter[0] += 1
                    work.append((w, v, iter(sorted(g.adj[w]))))
                    if v == root:
                        root_children += 1
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack.append((v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    comp = set()
                    while stack and disc[stack[-1][0]] >= disc[v]:
                        a, b = stack.pop()
                        comp.update((a, b))
                    if stack and stack[-1] == (u, v):
                        a, b = stack.pop()
                        comp.update((a, b))
                    comp.update((u, v))
                    comps.append(frozenset(comp))
                    if u != root or root_children > 1:
                        cuts.add(u)
        if root_children > 1:
            cuts.add(root)
    return comps, cuts


def extract_netblock(g: Graph) -> NetblockRep | None:
    """Representation with netblock_graph(rep) isomorphic to g, or None when
    g is not a net-free block graph.

    Every biconnected component must be a clique (block graph) and carry at
    most two cut vertices (net-freeness); the cut vertices become the tree
    edge's endpoints, padded with the lowest-id non-cut member when a
    component has fewer than two.
    """
    if not g.is_connected():
        raise ValueError("extract_netblock requires a connected graph")
    if g.n == 1:
        return NetblockRep(1, ())
    comps, cuts = _biconnected_components(g)
    for comp in comps:
        if any(not g.has_edge(u, v) for u in comp for v in comp if u < v):
            return None
        if len(comp & cuts) > 2:
            return None
    anchors: dict[int, int] = {}

    def anchor_id(vertex):
        if vertex not in anchors:
            anchors[vertex] = len(anchors)
        return anchors[vertex]

    weighted = []
    for comp in sorted(comps, key=min):
        cs = sorted(comp & cuts)
        free = sorted(comp - cuts)
        ends = (cs + free)[:2]
        weighted.append((anchor_id(ends[0]), anchor_id(ends[1]), len(comp) - 2))
    return make_netblock(len(anchors), weighted)


# ---------------------------------------------------------------------------
# (k-1)-subtrees, exits, and the colorability test
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SubtreeCertificate:
    """A maximal (k-1)-subtree with no (k-1)-exit vertex: proof that no star
    k-coloring exists."""

    nodes: frozenset
    k: int


@dataclass(frozen=True)
class WeightViolation:
    edge: tuple[int, int]
    k: int


def k1_subtrees(rep: NetblockRep, k: int):
    """Components of T under weight-(k-1) edges (singletons included), each
    flagged with whether it contains a (k-1)-exit vertex."""
    if k < 1:
        raise ValueError("k must be positive")
    target = k - 1
    adj = rep.tree_adj()
    sub = {v: set() for v in range(rep.nodes)}
    for (u, v), w in rep.weights:
        if w == target:
            sub[u].add(v)
            sub[v].add(u)
    seen = set()
    out = []
    for start in range(rep.nodes):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        seen.add(start)
        while stack:
            for w in sub[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        has_exit = any(rep.weight(v, w) < target
                       for v in comp for w in adj[v])
        out.append((frozenset(comp), has_exit))
    return out


def star_k_colorable_netblock(rep: NetblockRep, k: int):
    """True, or the certificate refusing a star k-coloring of G(T, K):
    an overweight edge, or an exit-free maximal (k-1)-subtree."""
    if rep.nodes <= 1:
        return True  # K_1 has no maximal stars; exits are meaningless without edges
    for (u, v), w in rep.weights:
        if w > k:
            return WeightViolation((u, v), k)
    for comp, has_exit in k1_subtrees(rep, k):
        if not has_exit:
            return SubtreeCertificate(comp, k)
    return True


def color_netblock(rep: NetblockRep, lists: ListAssignment, k: int) -> Coloring:
    """Star L-coloring of G(T, K) for uniform k-lists when the colorability
    test passes.

    Tree nodes are colored by BFS, each away from its parent; every clique
    B(vw) is colored rainbow avoiding the endpoint colors its weight
    requires, where weight-(k-1) cliques avoid the endpoint lying away from
    the chosen exit vertex of their subtree."""
    if lists.k != k:
        raise ValueError("uniform k-lists required")
    verdict = star_k_colorable_netblock(rep, k)
    if verdict is not True:
        raise ValueError(f"not star {k}-colorable: {verdict}")
    g, roles = netblock_graph(rep)
    if len(lists.lists) != g.n:
        raise ValueError("list assignment does not cover the graph")
    adj = rep.tree_adj()

    # exit vertex per maximal (k-1)-subtree, lowest id; z[v] for members
    z = {}
    for comp, _ in k1_subtrees(rep, k):
        exits = sorted(v for v in comp
                       if any(rep.weight(v, w) < k - 1 for w in adj[v]))
        zr = exits[0] if exits else min(comp)  # exits exist unless comp needs none
        for v in comp:
            z[v] = zr

    colors = {}
    if rep.nodes:
        order = [0]
        parent = {0: None}
        for v in order:
            for w in sorted(adj[v]):
                if w not in parent:
                    parent[w] = v
                    order.append(w)
        for v in order:
            banned = {colors[parent[v]]} if parent[v] is not None else set()
            choice = sorted(lists.lists[v] - banned)
            colors[v] = choice[0]

    def toward(v, target):
        # first step from v on the tree path to target
        prev = {v: None}
        stack = [v]
        while stack:
            u = stack.pop()
            if u == target:
                break
            for w in adj[u]:
                if w not in prev:
                    prev[w] = u
                    stack.append(w)
        step = target
        while prev[step] != v:
            step = prev[step]
        return step

    clique_of: dict[tuple[int, int], list[int]] = {e: [] for e, _ in rep.weights}
    for vert, role in roles.items():
        if role[0] == "B":
            clique_of[role[1]].append(vert)
    for (u, v), w in rep.weights:
        clique = clique_of[(u, v)]
        if not clique:
            continue
        banned = set()
        near = None
        if w <= k - 2:
            banned = {colors[u], colors[v]}
        elif w == k - 1:
            # endpoints share a (k-1)-subtree; ban the endpoint away from its exit
            zr = z[u]
            if zr == u:
                near = u
            elif zr == v or toward(v, zr) != u:
                near = v
            else:
                near = u
            banned = {colors[v if near == u else u]}
        allowed = {b: lists.lists[b] - banned for b in clique}
        assignment = rainbow_assignment(clique, allowed)
        assert assignment is not None, "rainbow step infeasible for valid k-lists"
        # weight-(k-1) cliques should also pick up the near endpoint's color
        # when some list offers it, matching the k-color closure of the rules
        if w == k - 1:
            near_color = colors[near]
            if near_color not in set(assignment.values()):
                for b in sorted(clique):
                    if near_color in lists.lists[b]:
                        trial = {x: lists.lists[x] - banned for x in clique if x != b}
                        redo = rainbow_assignment([x for x in clique if x != b],
                                                  {x: s - {near_color}
                                                   for x, s in trial.items()})
                        if redo is not None:
                            assignment = dict(redo)
                            assignment[b] = near_color
                            break
        colors.update(assignment)
    palette = max(max(colors.values()), k)
    return Coloring(palette, tuple(colors[v] for v in range(g.n)))
