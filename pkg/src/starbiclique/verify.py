"""Deciding whether a coloring is a star (biclique) coloring.

Generic verifiers re-enumerate the relevant family per call and stay
stateless; callers that verify many colorings of one graph can pass the
enumeration in.  For graphs in which every vertex is block separable there
is a polynomial fast path that never enumerates stars.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iproduct

from .enumeration import (Biclique, Star, make_biclique, make_star,
                          maximal_bicliques, maximal_stars)
from .graphs import BlockSeparation, Graph, block_separation, twin_partition


@dataclass(frozen=True)
class Coloring:
    """Total vertex coloring with colors drawn from 1..k."""

    k: int
    colors: tuple[int, ...]

    def __post_init__(self):
        if any(c < 1 or c > self.k for c in self.colors):
            raise ValueError("colors must lie in 1..k")

    def of(self, vs) -> set[int]:
        return {self.colors[v] for v in vs}

    def mono(self, vs) -> bool:
        return len(self.of(vs)) == 1


@dataclass(frozen=True)
class Violation:
    """Evidence that a coloring is not a star/biclique coloring.  The witness
    is monochromatic and maximal of its kind; it is absent only when the
    product-bound early exit asserted existence without constructing one."""

    kind: str  # mono_star | mono_biclique | block_repeat
    witness: object = None
    by_product_bound: bool = False


def _require_total(g: Graph, rho: Coloring):
    if len(rho.colors) != g.n:
        raise ValueError(f"coloring covers {len(rho.colors)} vertices, graph has {g.n}")


# ---------------------------------------------------------------------------
# Generic verifiers
# ---------------------------------------------------------------------------

def check_star_coloring(g: Graph, rho: Coloring, stars=None) -> Violation | None:
    """None if no maximal star is monochromatic, else a witness Violation."""
    _require_total(g, rho)
    if stars is None:
        stars = maximal_stars(g)
    for star in sorted(stars):
        if rho.mono(star.vertices):
            return Violation("mono_star", star)
    return None


def check_biclique_coloring(g: Graph, rho: Coloring, bicliques=None) -> Violation | None:
    _require_total(g, rho)
    if bicliques is None:
        bicliques = maximal_bicliques(g)
    for b in sorted(bicliques, key=lambda b: sorted(b.vertices)):
        if rho.mono(b.vertices):
            return Violation("mono_biclique", b)
    return None


def is_star_coloring(g: Graph, rho: Coloring, stars=None) -> bool:
    return check_star_coloring(g, rho, stars) is None


def is_biclique_coloring(g: Graph, rho: Coloring, bicliques=None) -> bool:
    return check_biclique_coloring(g, rho, bicliques) is None


# ---------------------------------------------------------------------------
# Fast path for block separable graphs
# ---------------------------------------------------------------------------

def all_block_separations(g: Graph) -> list[BlockSeparation]:
    seps = []
    for v in g.vertices():
        sep = block_separation(g, v)
        if sep is None:
            raise ValueError(f"vertex {v} is not block separable")
        seps.append(sep)
    return seps


def check_star_coloring_blocksep(g: Graph, rho: Coloring,
                                 separations=None) -> Violation | None:
    """Star-coloring check without star enumeration, valid when every vertex
    is block separable: twin blocks must be rainbow, and every center with
    two or more neighborhood parts needs a part free of its color."""
    _require_total(g, rho)
    tp = twin_partition(g)
    for block in tp.blocks:
        if len(rho.of(block)) != len(block):
            by_color: dict[int, int] = {}
            for v in sorted(block):
                if rho.colors[v] in by_color:
                    return Violation("block_repeat", (by_color[rho.colors[v]], v))
                by_color[rho.colors[v]] = v
    if separations is None:
        separations = all_block_separations(g)
    for sep in separations:
        if sep.ell < 2:
            continue
        v = sep.center
        cv = rho.colors[v]
        picks = []
        for part in sep.parts[1:]:
            hit = next((z for z in sorted(part) if rho.colors[z] == cv), None)
            if hit is None:
                picks = None
                break
            picks.append(hit)
        if picks is not None:
            return Violation("mono_star", make_star(g, v, picks))
    return None


def is_star_coloring_blocksep(g: Graph, rho: Coloring, separations=None) -> bool:
    return check_star_coloring_blocksep(g, rho, separations) is None


# ---------------------------------------------------------------------------
# Monochromatic maximal bicliques around one vertex (star-shaped side)
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class MonoBicliqueFinding:
    """A monochromatic maximal biclique exists; the witness is omitted when
    the product bound asserted existence without enumeration."""

    witness: Biclique | None
    by_product_bound: bool = False


def mono_star_biclique_exists(g: Graph, rho: Coloring, v: int) -> MonoBicliqueFinding | None:
    """Detect a monochromatic maximal biclique of the form {v}S.

    Counts the color-rho(v) vertices per neighborhood part; when the product
    of the counts reaches n, a violation is reported immediately, otherwise
    the few monochromatic maximal stars at v are generated and each is
    tested for an outside common neighbor.
    """
    _require_total(g, rho)
    sep = block_separation(g, v)
    if sep is None:
        raise ValueError(f"vertex {v} is not block separable")
    cv = rho.colors[v]
    # a twin of v with the same color is itself a monochromatic maximal biclique
    for w in sorted(sep.parts[0] - {v}):
        if g.closed(w) == g.closed(v) and rho.colors[w] == cv:
            return MonoBicliqueFinding(make_biclique({v}, {w}))
    if sep.ell < 2:
        return None
    same = [sorted(z for z in part if rho.colors[z] == cv) for part in sep.parts[1:]]
    prod = 1
    for zs in same:
        prod *= len(zs)
    if prod == 0:
        return None
    if prod >= g.n:
        return MonoBicliqueFinding(None, by_product_bound=True)
    outside = [w for w in g.vertices() if w != v and w not in g.adj[v]]
    for picks in iproduct(*same):
        s = frozenset(picks)
        if not any(s <= g.adj[w] for w in outside):
            return MonoBicliqueFinding(make_biclique({v}, s))
    return None


def mono_biclique_from_indepset(g: Graph, rho: Coloring, s) -> Biclique | None:
    """Monochromatic maximal biclique with one side exactly `s`, decided from
    the common neighborhood's twin blocks; requires every adjacent pair of
    common neighbors to be twins (holds on {W4, dart, gem}-free graphs)."""
    _require_total(g, rho)
    s = frozenset(s)
    if len(s) < 2:
        raise ValueError("independent side must have at least two vertices")
    for u in s:
        if g.adj[u] & s:
            raise ValueError("side is not independent")
    if len(rho.of(s)) != 1:
        return None
    common = None
    for u in s:
        common = g.adj[u] if common is None else common & g.adj[u]
    if not common:
        return None
    for u in common:
        for w in g.adj[u] & common:
            if g.closed(u) != g.closed(w):
                raise ValueError("adjacent common neighbors are not twins; "
                                 "graph is not {W4, dart, gem}-free")
    closure = None
    for u in common:
        closure = g.adj[u] if closure is None else closure & g.adj[u]
    if closure != s:
        return None
    color = next(iter(rho.of(s)))
    blocks: dict[frozenset, list[int]] = {}
    for u in common:
        blocks.setdefault(g.closed(u), []).append(u)
    picks = []
    for members in blocks.values():
        hit = next((u for u in sorted(members) if rho.colors[u] == color), None)
        if hit is None:
            return None
        picks.append(hit)
    return make_biclique(s, picks)


def check_biclique_coloring_blocksep(g: Graph, rho: Coloring, i_cap: int) -> Violation | None:
    """Biclique-coloring fast check for {W4, dart, gem}-free graphs whose
    bicliques have a side smaller than i_cap (the K_{i,i}-free bound, passed
    explicitly).  Scans star-shaped bicliques per vertex, then all
    independent sets of size 2..i_cap-1."""
    _require_total(g, rho)
    for v in g.vertices():
        finding = mono_star_biclique_exists(g, rho, v)
        if finding is not None:
            return Violation("mono_biclique", finding.witness,
                             by_product_bound=finding.by_product_bound)

    def indep_sets(p, current):
        if 2 <= len(current) < i_cap:
            yield current
        if len(current) + 1 < i_cap:
            for v in sorted(p):
                yield from indep_sets({u for u in p if u > v} - g.adj[v],
                                      current | {v})

    for s in indep_sets(set(g.vertices()), frozenset()):
        witness = mono_biclique_from_indepset(g, rho, s)
        if witness is not None:
            return Violation("mono_biclique", witness)
    return None
