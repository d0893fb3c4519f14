"""Exact desk-scale solvers.

One backtracking engine handles star and biclique k- and L-colorings: the
constraints are "no family member monochromatic" clauses plus (optionally)
all-different propagation over twin blocks, which any star or biclique
coloring must satisfy.  Choosability enumerates k-list assignments up to
color renaming as restricted-growth set partitions of the n*k list slots.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .enumeration import CapExceeded, maximal_bicliques, maximal_stars
from .graphs import Graph, twin_partition
from .verify import Coloring, check_biclique_coloring, check_star_coloring


class SolveTimeout(CapExceeded):
    """Wall-clock budget exhausted."""


DEFAULT_MAX_N = 64
DEFAULT_PATTERN_BUDGET = 300_000


@dataclass(frozen=True)
class ListAssignment:
    """Vertex color lists; k is the uniform list size, 0 when nonuniform."""

    k: int
    lists: tuple[frozenset, ...]

    def __post_init__(self):
        if self.k > 0 and any(len(s) != self.k for s in self.lists):
            raise ValueError(f"every list must have exactly {self.k} colors")
        if any(c < 1 for s in self.lists for c in s):
            raise ValueError("list colors must be positive")


def uniform_lists(n: int, k: int) -> ListAssignment:
    base = frozenset(range(1, k + 1))
    return ListAssignment(k, tuple(base for _ in range(n)))


@dataclass(frozen=True)
class SolveOutcome:
    status: str  # colorable | not_colorable
    coloring: Coloring | None = None
    refuting_assignment: ListAssignment | None = None

    @property
    def colorable(self) -> bool:
        return self.status == "colorable"


# ---------------------------------------------------------------------------
# Core engine
# ---------------------------------------------------------------------------

class _Search:
    """Backtracking with domain trail, twin-block all-diff and family
    ("not monochromatic") propagation."""

    def __init__(self, g: Graph, families, domains, use_blocks=True,
                 deadline=None):
        self.n = g.n
        self.dom = [set(d) for d in domains]
        self.color = [0] * g.n
        self.families = [tuple(sorted(f)) for f in families]
        self.fam_of = [[] for _ in range(g.n)]
        for i, f in enumerate(self.families):
            for v in f:
                self.fam_of[v].append(i)
        self.fam_count = [0] * len(self.families)
        self.fam_color = [0] * len(self.families)  # 0 none, -1 mixed
        self.twins = [()] * g.n
        if use_blocks:
            tp = twin_partition(g)
            for b in tp.blocks:
                for v in b:
                    self.twins[v] = tuple(sorted(b - {v}))
        self.trail = []
        self.order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
        self.deadline = deadline
        self.nodes = 0

    # -- trail helpers ------------------------------------------------------

    def _mark(self):
        return len(self.trail)

    def _undo(self, mark):
        while len(self.trail) > mark:
            kind, *rest = self.trail.pop()
            if kind == 0:
                self.color[rest[0]] = 0
            elif kind == 1:
                v, c = rest
                self.dom[v].add(c)
            else:
                i, cnt, col = rest
                self.fam_count[i] = cnt
                self.fam_color[i] = col

    def _remove(self, v, c, queue):
        if c in self.dom[v]:
            self.dom[v].discard(c)
            self.trail.append((1, v, c))
            if self.color[v] == 0:
                if not self.dom[v]:
                    return False
                if len(self.dom[v]) == 1:
                    queue.append((v, next(iter(self.dom[v]))))
        return True

    def _assign(self, v, c):
        queue = [(v, c)]
        while queue:
            v, c = queue.pop()
            if self.color[v] != 0:
                if self.color[v] != c:
                    return False
                continue
            if c not in self.dom[v]:
                return False
            self.color[v] = c
            self.trail.append((0, v))
            for u in self.twins[v]:
                if self.color[u] == 0 and not self._remove(u, c, queue):
                    return False
            for i in self.fam_of[v]:
                col = self.fam_color[i]
                if col == -1:
                    continue
                self.trail.append((2, i, self.fam_count[i], col))
                self.fam_count[i] += 1
                if col == 0:
                    self.fam_color[i] = c
                elif col != c:
                    self.fam_color[i] = -1
                    continue
                f = self.families[i]
                if self.fam_count[i] == len(f) and self.fam_color[i] != -1:
                    return False
                if self.fam_count[i] == len(f) - 1 and self.fam_color[i] != -1:
                    last = next(u for u in f if self.color[u] == 0)
                    if not self._remove(last, self.fam_color[i], queue):
                        return False
        return True

    # -- search -------------------------------------------------------------

    def run(self):
        """Yield every complete valid coloring as a tuple; callers wanting a
        single witness just take the first."""
        yield from self._search(0)

    def _search(self, idx):
        self.nodes += 1
        if self.deadline is not None and self.nodes % 512 == 0:
            if time.monotonic() > self.deadline:
                raise SolveTimeout("solver timeout")
        while idx < self.n and self.color[self.order[idx]] != 0:
            idx += 1
        if idx == self.n:
            yield tuple(self.color)
            return
        v = self.order[idx]
        for c in sorted(self.dom[v]):
            mark = self._mark()
            if self._assign(v, c):
                yield from self._search(idx + 1)
            self._undo(mark)


def find_coloring(g: Graph, families, k=None, lists: ListAssignment | None = None,
                  preassigned=None, use_blocks=True, timeout_s=None):
    """First valid coloring (tuple of colors) or None.

    families: vertex sets that must not be monochromatic.  use_blocks adds
    all-different propagation over twin blocks, sound whenever the families
    include every twin-pair star/biclique.
    """
    domains = _domains(g, k, lists)
    deadline = None if timeout_s is None else time.monotonic() + timeout_s
    search = _Search(g, families, domains, use_blocks, deadline)
    if preassigned:
        mark = search._mark()
        for v, c in sorted(preassigned.items()):
            if not search._assign(v, c):
                search._undo(mark)
                return None
    for sol in search.run():
        return sol
    return None


def enumerate_colorings(g: Graph, families, k=None, lists=None,
                        preassigned=None, use_blocks=True):
    """All valid colorings, for exhaustive lemma checks on small hosts."""
    domains = _domains(g, k, lists)
    search = _Search(g, families, domains, use_blocks)
    if preassigned:
        for v, c in sorted(preassigned.items()):
            if not search._assign(v, c):
                return
    yield from search.run()


def _domains(g, k, lists):
    if lists is not None:
        if len(lists.lists) != g.n:
            raise ValueError("list assignment does not cover the graph")
        return [set(s) for s in lists.lists]
    if k is None or k < 1:
        raise ValueError("either k >= 1 or a list assignment is required")
    return [set(range(1, k + 1)) for _ in range(g.n)]


def _outcome(g, families, k, lists, checker, timeout_s=None) -> SolveOutcome:
    sol = find_coloring(g, families, k, lists, timeout_s=timeout_s)
    if sol is None:
        return SolveOutcome("not_colorable")
    palette = max(sol) if lists is not None else k
    rho = Coloring(max(palette, 1), sol)
    violation = checker(g, rho)
    assert violation is None, f"solver produced an invalid witness: {violation}"
    return SolveOutcome("colorable", coloring=rho)


def star_families(g: Graph):
    return [star.vertices for star in maximal_stars(g)]


def biclique_families(g: Graph, cap=DEFAULT_MAX_N):
    return [b.vertices for b in maximal_bicliques(g, cap)]


def solve_star_coloring(g: Graph, k=None, lists=None, max_n=DEFAULT_MAX_N,
                        timeout_s=None) -> SolveOutcome:
    """Complete search for a star k- or L-coloring."""
    if g.n > max_n:
        raise CapExceeded(f"solve cap {max_n} exceeded (n={g.n})")
    fams = star_families(g)
    return _outcome(g, fams, k, lists,
                    lambda g_, rho: check_star_coloring(g_, rho, maximal_stars(g_)),
                    timeout_s)


def solve_biclique_coloring(g: Graph, k=None, lists=None, max_n=DEFAULT_MAX_N,
                            timeout_s=None) -> SolveOutcome:
    if g.n > max_n:
        raise CapExceeded(f"solve cap {max_n} exceeded (n={g.n})")
    fams = biclique_families(g, max_n)
    return _outcome(g, fams, k, lists,
                    lambda g_, rho: check_biclique_coloring(g_, rho),
                    timeout_s)


def chromatic(g: Graph, mode: str, max_n=DEFAULT_MAX_N, timeout_s=None):
    """Smallest k admitting a star/biclique k-coloring, with witness."""
    solve = _mode_solver(mode)
    tp = twin_partition(g)
    k = max((len(b) for b in tp.blocks), default=1)
    while True:
        outcome = solve(g, k=k, max_n=max_n, timeout_s=timeout_s)
        if outcome.colorable:
            return k, outcome.coloring
        k += 1


def _mode_solver(mode):
    if mode == "star":
        return solve_star_coloring
    if mode == "biclique":
        return solve_biclique_coloring
    raise ValueError(f"unknown mode {mode!r}")


# ---------------------------------------------------------------------------
# Choosability
# ---------------------------------------------------------------------------

def canonical_list_patterns(n: int, k: int):
    """All k-list assignments on n vertices up to color renaming.

    Patterns are set partitions of the n*k list slots in which slots of one
    vertex land in distinct classes, enumerated as restricted-growth
    strings; class ids become colors.  The identical-lists assignment comes
    first.
    """
    slots = n * k
    labels = [0] * slots

    def rec(i, max_used):
        if i == slots:
            lists = tuple(frozenset(labels[v * k + j] + 1 for j in range(k))
                          for v in range(n))
            yield ListAssignment(k, lists)
            return
        taken = {labels[i - j - 1] for j in range(i % k)}
        for c in range(max_used + 2):
            if c not in taken:
                labels[i] = c
                yield from rec(i + 1, max(max_used, c))

    yield from rec(0, -1)


def is_k_choosable(g: Graph, k: int, mode: str,
                   pattern_budget=DEFAULT_PATTERN_BUDGET,
                   timeout_s=None) -> SolveOutcome:
    """Decide k-choosability by enumerating list patterns and solving each.

    Doubly exponential: refutations tend to appear early (identical lists
    first), but confirming choosability visits every pattern and raises
    CapExceeded when the budget runs out.
    """
    if mode == "star":
        fams = star_families(g)
    elif mode == "biclique":
        fams = biclique_families(g)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    deadline = None if timeout_s is None else time.monotonic() + timeout_s
    seen = 0
    for lists in canonical_list_patterns(g.n, k):
        seen += 1
        if seen > pattern_budget:
            raise CapExceeded(
                f"choosability pattern budget {pattern_budget} exceeded")
        remaining = None if deadline is None else deadline - time.monotonic()
        if remaining is not None and remaining <= 0:
            raise SolveTimeout("choosability timeout")
        sol = find_coloring(g, fams, lists=lists, timeout_s=remaining)
        if sol is None:
            return SolveOutcome("not_colorable", refuting_assignment=lists)
    return SolveOutcome("colorable")


# ---------------------------------------------------------------------------
# Rainbow assignment from lists (system of distinct representatives)
# ---------------------------------------------------------------------------

def rainbow_assignment(items, allowed: dict) -> dict | None:
    """Assign each item a distinct color from allowed[item], or None.
    Simple augmenting-path bipartite matching; deterministic."""
    items = sorted(items)
    match: dict[int, object] = {}  # color -> item

    def augment(item, banned):
        for c in sorted(allowed[item]):
            if c in banned:
                continue
            banned.add(c)
            if c not in match or augment(match[c], banned):
                match[c] = item
                return True
        return False

    for it in items:
        if not augment(it, set()):
            return None
    return {it: c for c, it in match.items()}
