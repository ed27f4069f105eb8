"""Exact desk-scale oracles: clique, independence and chromatic numbers,
Ramsey extraction, vertex connectivity, connected high-chromatic cores,
induced embeddings and a naive induced-subdivision test.

These stand in for the external existence theorems and serve as ground truth
for the property tests; none of them share code with the subdivision
detector in :mod:`pabfree.subdivision`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable

from ._bits import bit, iter_bits, lowest, mask_of
from .graph import Graph
from .guards import Guards, resolve

CLIQUE = "clique"
INDEPENDENT_SET = "independent_set"
NEITHER = "neither"


@dataclass(frozen=True)
class ColouringCertificate:
    colour: tuple[int, ...]

    @property
    def colours_used(self) -> int:
        return len(set(self.colour))

    def is_proper(self, g: Graph) -> bool:
        if len(self.colour) != g.n:
            return False
        return all(self.colour[u] != self.colour[v] for u, v in g.edges())

    def classes(self) -> list[list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colour):
            out.setdefault(c, []).append(v)
        return [out[c] for c in sorted(out)]


@dataclass(frozen=True)
class RamseyOutcome:
    kind: str
    vertices: tuple[int, ...]


# -- cliques -----------------------------------------------------------------

def _colour_sort(adj: tuple[int, ...], P: int) -> list[tuple[int, int]]:
    """Greedy sequential colouring of P; returns (vertex, colour index) sorted
    by colour, colours starting at 1 (the MCQ bound)."""
    order = []
    k = 0
    rest = P
    while rest:
        k += 1
        Q = rest
        while Q:
            v = lowest(Q)
            order.append((v, k))
            rest &= ~bit(v)
            Q &= ~adj[v] & ~bit(v)
    return order


def _max_clique_in(adj: tuple[int, ...], P: int) -> list[int]:
    best: list[int] = []

    def expand(R: list[int], P: int) -> None:
        nonlocal best
        for v, k in reversed(_colour_sort(adj, P)):
            if len(R) + k <= len(best):
                return
            newP = P & adj[v]
            R.append(v)
            if newP:
                expand(R, newP)
            elif len(R) > len(best):
                best = sorted(R)
            R.pop()
            P &= ~bit(v)

    if P:
        expand([], P)
    return best


def max_clique(g: Graph, within: Iterable[int] | None = None) -> list[int]:
    P = g.vertex_mask if within is None else mask_of(within)
    return _max_clique_in(g.adj, P)


def clique_number(g: Graph) -> tuple[int, list[int]]:
    """Return (omega, a maximum clique)."""
    c = max_clique(g)
    return len(c), c


def max_independent_set(g: Graph, within: Iterable[int] | None = None) -> list[int]:
    if within is None:
        return _max_clique_in(g.complement().adj, g.vertex_mask)
    vs = sorted(set(within))
    sub = g.induced(vs).complement()
    return [vs[i] for i in _max_clique_in(sub.adj, sub.vertex_mask)]


# -- colouring ----------------------------------------------------------------

def dsatur_colouring(g: Graph) -> list[int]:
    """Greedy DSATUR; ties on saturation go to larger degree, then smaller id."""
    n = g.n
    colour = [-1] * n
    nbr_colours = [0] * n
    for _ in range(n):
        v = max((u for u in range(n) if colour[u] < 0),
                key=lambda u: (nbr_colours[u].bit_count(), g.degree(u), -u))
        c = lowest(~nbr_colours[v])
        colour[v] = c
        for u in iter_bits(g.adj[v]):
            nbr_colours[u] |= bit(c)
    return colour


def chromatic_number(g: Graph, *, guards: Guards | None = None) -> ColouringCertificate:
    """Exact colouring by DSATUR branch and bound.

    The maximum clique is precoloured 0..omega-1 and gives the lower bound;
    greedy DSATUR gives the initial upper bound.
    """
    resolve(guards).check("max_colour_vertices", g.n)
    n = g.n
    if n == 0:
        return ColouringCertificate(())
    clique = max_clique(g)
    lb = len(clique)
    greedy = dsatur_colouring(g)
    ub = max(greedy) + 1
    if ub == lb:
        return ColouringCertificate(tuple(greedy))

    adj = g.adj
    nbrs = [list(iter_bits(adj[v])) for v in range(n)]
    colour = [-1] * n
    count = [[0] * ub for _ in range(n)]
    sat = [0] * n
    best_k = ub
    best = list(greedy)

    def assign(v: int, c: int) -> None:
        colour[v] = c
        for u in nbrs[v]:
            if count[u][c] == 0:
                sat[u] += 1
            count[u][c] += 1

    def unassign(v: int, c: int) -> None:
        colour[v] = -1
        for u in nbrs[v]:
            count[u][c] -= 1
            if count[u][c] == 0:
                sat[u] -= 1

    for c, v in enumerate(clique):
        assign(v, c)
    uncoloured = [v for v in range(n) if colour[v] < 0]

    def rec(remaining: list[int], used: int) -> None:
        nonlocal best_k, best
        if not remaining:
            if used < best_k:
                best_k, best = used, list(colour)
            return
        v = max(remaining, key=lambda u: (sat[u], len(nbrs[u]), -u))
        rest = [u for u in remaining if u != v]
        for c in range(min(used + 1, best_k - 1)):
            if count[v][c]:
                continue
            assign(v, c)
            rec(rest, max(used, c + 1))
            unassign(v, c)
            if best_k == lb:
                return

    rec(uncoloured, lb)
    return ColouringCertificate(tuple(best))


def ramsey_extract(g: Graph, p: int, q: int, *, guards: Guards | None = None) -> RamseyOutcome:
    """Find a clique or an independent set on at least p+q vertices, by
    exhaustive search; ``neither`` certifies that none exists."""
    resolve(guards).check("max_colour_vertices", g.n)
    k = p + q
    clique = max_clique(g)
    if len(clique) >= k:
        return RamseyOutcome(CLIQUE, tuple(clique))
    indep = max_independent_set(g)
    if len(indep) >= k:
        return RamseyOutcome(INDEPENDENT_SET, tuple(indep))
    return RamseyOutcome(NEITHER, ())


# -- connectivity ---------------------------------------------------------------

def _local_cut(g: Graph, s: int, t: int) -> tuple[int, list[int]]:
    """Max number of internally disjoint s-t paths (s, t non-adjacent) and a
    minimum s-t vertex separator, by unit-capacity augmenting paths on the
    vertex-split network (v_in = 2v, v_out = 2v + 1)."""
    n = g.n
    big = n + 1
    cap: list[dict[int, int]] = [dict() for _ in range(2 * n)]
    for v in range(n):
        cap[2 * v][2 * v + 1] = big if v in (s, t) else 1
        cap[2 * v + 1].setdefault(2 * v, 0)
        for u in iter_bits(g.adj[v]):
            cap[2 * v + 1][2 * u] = big
            cap[2 * u].setdefault(2 * v + 1, 0)
    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if sink not in parent:
            break
        y = sink
        while y != source:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] += 1
            y = x
        flow += 1
    reached = parent
    cut = [v for v in range(n) if 2 * v in reached and 2 * v + 1 not in reached]
    return flow, cut


def local_connectivity(g: Graph, s: int, t: int) -> int:
    if g.has_edge(s, t):
        raise ValueError("local vertex connectivity needs non-adjacent endpoints")
    return _local_cut(g, s, t)[0]


def minimum_vertex_cut(g: Graph) -> list[int] | None:
    """A minimum disconnecting vertex set, or None for complete graphs."""
    n = g.n
    if g.is_complete():
        return None
    comps = g.components()
    if len(comps) > 1:
        return []
    # a min-degree vertex has a non-neighbour, so its neighbourhood separates
    v = min(range(n), key=lambda u: (g.degree(u), u))
    best_cut = g.neighbours(v)
    i = 0
    while i < n and i <= len(best_cut):
        for j in range(i + 1, n):
            if g.has_edge(i, j):
                continue
            val, cut = _local_cut(g, i, j)
            if val < len(best_cut):
                best_cut = cut
        i += 1
    return sorted(best_cut)


def vertex_connectivity(g: Graph) -> int:
    """Largest k for which :func:`is_k_connected` holds (0 for the empty graph)."""
    if g.n == 0:
        return 0
    if g.is_complete():
        return g.n - 1
    return len(minimum_vertex_cut(g))


def is_k_connected(g: Graph, k: int) -> bool:
    """Complete with at least k+1 vertices, or non-complete with no
    disconnecting set of at most k-1 vertices."""
    if g.is_complete():
        return g.n >= k + 1
    return vertex_connectivity(g) >= k


@dataclass
class CoreSearch:
    """Outcome of :func:`find_k_connected_chromatic`."""

    k: int
    found: Graph | None
    chromatic: int | None = None
    connectivity: int | None = None
    trail: list[str] = field(default_factory=list)

    @property
    def vertices(self) -> list[int]:
        if self.found is None:
            return []
        return [self.found.to_root(v) for v in range(self.found.n)]


def find_k_connected_chromatic(g: Graph, k: int, *, guards: Guards | None = None) -> CoreSearch:
    """Search for an induced subgraph that is k-connected with chromatic number >= k.

    If the current graph is k-connected and k-chromatic it is returned;
    otherwise it is split along a minimum vertex cut X and the search
    recurses into the pieces (component + X), most chromatic first.
    """
    guards = resolve(guards)
    guards.check("max_colour_vertices", g.n)
    result = CoreSearch(k, None)
    root = g if g.origin is not None else g.induced(range(g.n))

    def rec(h: Graph) -> Graph | None:
        chi = chromatic_number(h, guards=guards).colours_used
        label = [h.to_root(v) for v in range(h.n)]
        if chi < k:
            result.trail.append(f"{label}: chromatic number {chi} < {k}")
            return None
        if is_k_connected(h, k):
            result.trail.append(f"{label}: {k}-connected with chromatic number {chi}")
            return h
        cut = minimum_vertex_cut(h)
        if cut is None:
            result.trail.append(f"{label}: complete on {h.n} <= {k} vertices")
            return None
        cut_mask = mask_of(cut)
        pieces = [h.induced(comp + cut) for comp in h.components(h.vertex_mask & ~cut_mask)]
        scored = [(chromatic_number(p, guards=guards).colours_used, p) for p in pieces]
        scored.sort(key=lambda t: (-t[0], t[1].to_root(0)))
        result.trail.append(f"{label}: split along cut {[h.to_root(v) for v in cut]} "
                            f"into pieces with chromatic numbers {[c for c, _ in scored]}")
        for chi_p, piece in scored:
            if chi_p < k:
                break
            found = rec(piece)
            if found is not None:
                return found
        return None

    found = rec(root)
    if found is not None:
        result.found = found
        result.chromatic = chromatic_number(found, guards=guards).colours_used
        result.connectivity = vertex_connectivity(found)
    return result


# -- embeddings ---------------------------------------------------------------

def _search_order(h: Graph) -> list[int]:
    order: list[int] = []
    placed = 0
    while len(order) < h.n:
        frontier = 0
        for v in order:
            frontier |= h.adj[v]
        frontier &= ~placed
        pool = list(iter_bits(frontier)) or [v for v in range(h.n) if not placed >> v & 1]
        v = max(pool, key=lambda u: (h.degree(u), -u))
        order.append(v)
        placed |= bit(v)
    return order


def induced_embedding(h: Graph, g: Graph, *, guards: Guards | None = None) -> dict[int, int] | None:
    """Injective map V(h) -> V(g) preserving adjacency and non-adjacency, or None."""
    resolve(guards).check("max_embed_pattern", h.n)
    if h.n > g.n:
        return None
    order = _search_order(h)
    phi: dict[int, int] = {}
    used = 0
    full = g.vertex_mask

    def rec(i: int) -> bool:
        nonlocal used
        if i == len(order):
            return True
        v = order[i]
        cand = full & ~used
        for u, w in phi.items():
            if h.has_edge(u, v):
                cand &= g.adj[w]
            else:
                cand &= ~g.adj[w]
        need = h.degree(v)
        for w in iter_bits(cand):
            if g.degree(w) < need:
                continue
            phi[v] = w
            used |= bit(w)
            if rec(i + 1):
                return True
            del phi[v]
            used &= ~bit(w)
        return False

    if rec(0):
        return dict(sorted(phi.items()))
    return None


def is_isomorphic(h: Graph, g: Graph, *, guards: Guards | None = None) -> bool:
    if h.n != g.n or h.edge_count != g.edge_count:
        return False
    if sorted(h.degree(v) for v in range(h.n)) != sorted(g.degree(v) for v in range(g.n)):
        return False
    return induced_embedding(h, g, guards=guards) is not None


# -- naive subdivision oracle -------------------------------------------------

def _suppress(g: Graph, drop: int) -> Graph | None:
    """Suppress the degree-2 vertices in ``drop``; None if a loop, multi-edge or
    an all-suppressed cycle appears."""
    keep = [v for v in range(g.n) if not drop >> v & 1]
    index = {v: i for i, v in enumerate(keep)}
    adj = [0] * len(keep)
    for u in keep:
        for first in iter_bits(g.adj[u]):
            prev, cur = u, first
            steps = 0
            while drop >> cur & 1:
                a, b = iter_bits(g.adj[cur])
                prev, cur = cur, (b if a == prev else a)
                steps += 1
                if steps > g.n:
                    return None
            if cur == u:
                return None
            iu, iw = index[u], index[cur]
            if adj[iu] >> iw & 1:
                return None
            adj[iu] |= 1 << iw
    # every suppressed vertex must lie on a chain that reaches a kept vertex
    covered = 0
    for u in keep:
        for first in iter_bits(g.adj[u]):
            prev, cur = u, first
            while drop >> cur & 1:
                covered |= bit(cur)
                a, b = iter_bits(g.adj[cur])
                prev, cur = cur, (b if a == prev else a)
    if covered != drop:
        return None
    sym = [0] * len(keep)
    for i, m in enumerate(adj):
        sym[i] |= m
        for j in iter_bits(m):
            sym[j] |= 1 << i
    return Graph(len(keep), tuple(sym))


def is_subdivision_of(h: Graph, s: Graph) -> bool:
    """Is ``s`` (as a whole) isomorphic to some subdivision of ``h``?"""
    k = s.n - h.n
    if k < 0 or s.edge_count != h.edge_count + k:
        return False
    h_degrees = sorted(h.degree(v) for v in range(h.n))
    deg2 = [v for v in range(s.n) if s.degree(v) == 2]
    for drop in combinations(deg2, k):
        dmask = mask_of(drop)
        kept_degrees = sorted(s.degree(v) for v in range(s.n) if not dmask >> v & 1)
        if kept_degrees != h_degrees:
            continue
        t = _suppress(s, dmask)
        if t is not None and is_isomorphic(h, t):
            return True
    return False


def naive_induced_subdivision(h: Graph, g: Graph) -> list[int] | None:
    """Vertex set of some induced subgraph of g that is a subdivision of h."""
    for size in range(h.n, g.n + 1):
        for subset in combinations(range(g.n), size):
            s = g.induced(subset)
            if is_subdivision_of(h, s):
                return list(subset)
    return None
