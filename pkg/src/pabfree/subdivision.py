"""Induced-subdivision detection, class membership and witness validation.

The detector places branch vertices one pattern vertex at a time and, as soon
as both ends of a pattern edge are placed, routes that edge as an induced path
(shortest first, lexicographic tie-break). The "induced" requirement is
enforced incrementally: every vertex added to the embedding may only touch the
vertices it is supposed to touch.

:func:`validate_witness` re-checks a witness from scratch by direct
enumeration and shares nothing with the search.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Union

from ._bits import bit, iter_bits
from .graph import A_PART, APEX, B_PART, PAIR, Graph, PatternPab, gen_pattern
from .guards import Guards, resolve

Pattern = Union[PatternPab, Graph]


@dataclass(frozen=True)
class SubdivisionWitness:
    """branch[v] is the host image of pattern vertex v; paths[(u, v)] (u < v)
    runs from branch[u] to branch[v]."""

    branch: dict[int, int]
    paths: dict[tuple[int, int], tuple[int, ...]]

    def vertices(self) -> list[int]:
        vs = set(self.branch.values())
        for p in self.paths.values():
            vs.update(p)
        return sorted(vs)

    def path_lengths(self) -> dict[tuple[int, int], int]:
        return {e: len(p) - 1 for e, p in self.paths.items()}


@dataclass(frozen=True)
class Validation:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _underlying(h: Pattern) -> Graph:
    return h.underlying if isinstance(h, PatternPab) else h


# -- validation ------------------------------------------------------------------

def validate_witness(h: Pattern, g: Graph, w: SubdivisionWitness) -> Validation:
    """Check every witness invariant; the reason names the first violated clause."""
    hg = _underlying(h)
    if set(w.branch) != set(range(hg.n)):
        return Validation(False, "branch map does not cover the pattern vertices")
    images = list(w.branch.values())
    if any(not 0 <= x < g.n for x in images):
        return Validation(False, "branch image outside the host")
    if len(set(images)) != len(images):
        return Validation(False, "branch map not injective")
    want = {(u, v) for u, v in hg.edges()}
    got = {(min(e), max(e)) for e in w.paths}
    if got != want or len(w.paths) != len(want):
        return Validation(False, "path map does not match the pattern edges")

    interior_owner: dict[int, tuple[int, int]] = {}
    consecutive: set[tuple[int, int]] = set()
    for e, path in w.paths.items():
        u, v = e
        if len(path) < 2:
            return Validation(False, f"path for {e} has length < 1")
        if {path[0], path[-1]} != {w.branch[u], w.branch[v]} or path[0] == path[-1]:
            return Validation(False, f"path for {e} does not join its branch images")
        if any(not 0 <= x < g.n for x in path):
            return Validation(False, f"path for {e} leaves the host")
        for x in path[1:-1]:
            if x in interior_owner or x in images or path.count(x) > 1:
                return Validation(False, "paths not internally disjoint")
            interior_owner[x] = e
        for x, y in zip(path, path[1:]):
            consecutive.add((min(x, y), max(x, y)))

    union = sorted(set(images) | set(interior_owner))
    for x, y in combinations(union, 2):
        adjacent = g.has_edge(x, y)
        if (x, y) in consecutive:
            if not adjacent:
                return Validation(False, f"adjacency violated: consecutive path vertices {x}, {y} "
                                         "are not adjacent")
        elif adjacent:
            return Validation(False, f"non-adjacency violated: {x}, {y} are adjacent")
    return Validation(True)


# -- search ----------------------------------------------------------------------

def _pab_order(p: PatternPab) -> list[int]:
    x, y = p.pair
    A, B = p.a_part, p.b_part
    return [A[0], x, y, p.apex, *A[1:], *B]


def _generic_order(h: Graph) -> list[int]:
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


def _induced_paths(adj: tuple[int, ...], s: int, t: int, used: int):
    """Yield induced s-t paths (s, t non-adjacent) whose interiors avoid ``used``
    and touch nothing in ``used`` except s (first vertex) and t (last vertex).

    Paths come out shortest first, lexicographic within a length.
    """
    sb, tb = bit(s), bit(t)
    frontier = [((s,), sb)]
    while frontier:
        nxt = []
        for path, pmask in frontier:
            c = path[-1]
            cb = bit(c)
            blocked = (used | pmask) & ~(cb | tb)
            for w in iter_bits(adj[c] & ~used & ~pmask):
                aw = adj[w]
                if aw & blocked:
                    continue
                if aw & tb:
                    yield path + (w, t), pmask | bit(w)
                else:
                    nxt.append((path + (w,), pmask | bit(w)))
        frontier = nxt


class _Search:
    def __init__(self, hg: Graph, g: Graph, order: list[int], lower: dict[int, int]):
        self.hg = hg
        self.g = g
        self.order = order
        # lower[v] = earlier pattern vertex whose image must be smaller than v's
        self.lower = lower
        pos = {v: i for i, v in enumerate(order)}
        self.back = [[u for u in order[:i] if hg.has_edge(u, v)] for i, v in enumerate(order)]
        self.back_mask = [sum(bit(u) for u in self.back[i]) for i in range(len(order))]
        # pattern edges still to be routed after position i, per pattern vertex
        self.pending_after = []
        for i in range(len(order)):
            counts = {}
            for v in order[: i + 1]:
                counts[v] = sum(1 for u in iter_bits(hg.adj[v]) if pos[u] > i)
            self.pending_after.append(counts)
        self.phi: dict[int, int] = {}
        self.paths: dict[tuple[int, int], tuple[int, ...]] = {}
        self.g_deg = [g.degree(v) for v in range(g.n)]

    def run(self) -> SubdivisionWitness | None:
        if self._place(0, 0):
            return SubdivisionWitness(dict(sorted(self.phi.items())), dict(sorted(self.paths.items())))
        return None

    def _place(self, i: int, used: int) -> bool:
        if i == len(self.order):
            return True
        g, hg = self.g, self.hg
        v = self.order[i]
        need = hg.degree(v)
        allowed = 0
        for u in self.back[i]:
            allowed |= bit(self.phi[u])
        low = self.phi[self.lower[v]] if v in self.lower else -1
        cand = g.vertex_mask & ~used & ~((1 << (low + 1)) - 1)
        for w in iter_bits(cand):
            if self.g_deg[w] < need:
                continue
            if g.adj[w] & used & ~allowed:
                continue
            self.phi[v] = w
            used_w = used | bit(w)
            if self._exits_ok(i, used_w) and self._route(i, 0, used_w):
                return True
            del self.phi[v]
        return False

    def _exits_ok(self, i: int, used: int) -> bool:
        adj = self.g.adj
        for v, k in self.pending_after[i].items():
            if k and (adj[self.phi[v]] & ~used).bit_count() < k:
                return False
        return True

    def _route(self, i: int, k: int, used: int) -> bool:
        back = self.back[i]
        if k == len(back):
            return self._place(i + 1, used)
        v = self.order[i]
        u = back[k]
        s, t = self.phi[u], self.phi[v]
        key = (min(u, v), max(u, v))
        if self.g.has_edge(s, t):
            self.paths[key] = (s, t) if u < v else (t, s)
            if self._route(i, k + 1, used):
                return True
            del self.paths[key]
            return False
        for path, pmask in _induced_paths(self.g.adj, s, t, used):
            self.paths[key] = path if u < v else tuple(reversed(path))
            if self._route(i, k + 1, used | pmask):
                return True
            del self.paths[key]
        return False


def detect_induced_subdivision(h: Pattern, g: Graph, *,
                               guards: Guards | None = None) -> SubdivisionWitness | None:
    """Find an induced subdivision of ``h`` in ``g``; None means none exists.

    A :class:`PatternPab` switches on the role-aware search: images within the
    pair, the A-part and the B-part are taken in increasing order, which is
    sound because permuting vertices inside one role is an automorphism.
    """
    guards = resolve(guards)
    hg = _underlying(h)
    guards.check("max_subdivision_pattern", hg.n)
    if isinstance(h, PatternPab):
        guards.check("max_host_pab", g.n)
        order = _pab_order(h)
        lower = {}
        for group in (h.pair, h.a_part, h.b_part):
            for prev, cur in zip(group, group[1:]):
                lower[cur] = prev
    else:
        guards.check("max_host_generic", g.n)
        order = _generic_order(hg)
        lower = {}
    if hg.n == 0:
        return SubdivisionWitness({}, {})
    if hg.n > g.n or hg.edge_count > g.edge_count:
        return None
    return _Search(hg, g, order, lower).run()


def is_member(g: Graph, a: int, *, guards: Guards | None = None) -> bool:
    """True iff g has no induced subdivision of P(a, a)."""
    return detect_induced_subdivision(gen_pattern(a, a), g, guards=guards) is None


def pattern_labels(h: Pattern) -> dict[int, str]:
    if isinstance(h, PatternPab):
        return {v: h.label(v) for v in range(h.underlying.n)}
    return {v: str(v) for v in range(h.n)}


__all__ = [
    "SubdivisionWitness", "Validation", "validate_witness", "detect_induced_subdivision",
    "is_member", "pattern_labels", "APEX", "PAIR", "A_PART", "B_PART",
]
