"""Complete multipartite templates: growth, K(s,s) search, induced biclique
extraction and the maximal template."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

from .._bits import bit, iter_bits, lowest, mask_of
from ..graph import Graph
from ..guards import Guards, resolve
from ..oracles import max_independent_set


class TemplateError(ValueError):
    pass


class TemplateGrowthError(TemplateError):
    """No trace class of Z holds an independent set of the required size."""

    def __init__(self, reason: str, best_class: list[int] | None = None, best_size: int = 0):
        super().__init__(reason)
        self.reason = reason
        self.best_class = best_class or []
        self.best_size = best_size


class BicliqueNotFound(TemplateError):
    pass


@dataclass(frozen=True)
class Template:
    parts: tuple[tuple[int, ...], ...]

    @classmethod
    def of(cls, parts: Iterable[Iterable[int]]) -> "Template":
        return cls(tuple(tuple(sorted(p)) for p in parts))

    @property
    def r(self) -> int:
        return len(self.parts)

    @cached_property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(v for p in self.parts for v in p)

    @property
    def mask(self) -> int:
        return mask_of(self.vertex_set)

    def sizes(self) -> list[int]:
        return [len(p) for p in self.parts]


def template_violations(g: Graph, X: Template) -> list[str]:
    """Direct pairwise enumeration of the template invariants."""
    problems = []
    seen: set[int] = set()
    for i, p in enumerate(X.parts):
        if not p:
            problems.append(f"part {i} is empty")
        if seen & set(p):
            problems.append(f"part {i} overlaps an earlier part")
        seen |= set(p)
        for k, u in enumerate(p):
            for w in p[k + 1:]:
                if g.has_edge(u, w):
                    problems.append(f"part {i} has internal edge {u}-{w}")
    for i in range(X.r):
        for j in range(i + 1, X.r):
            for u in X.parts[i]:
                for w in X.parts[j]:
                    if not g.has_edge(u, w):
                        problems.append(f"parts {i} and {j} miss edge {u}-{w}")
    return problems


def is_template(g: Graph, X: Template) -> bool:
    return not template_violations(g, X)


def z_set(g: Graph, X: Template, a: int) -> list[int]:
    """Vertices outside X with at most ``a`` non-neighbours in every part."""
    masks = [mask_of(p) for p in X.parts]
    inside = X.mask
    out = []
    for v in range(g.n):
        if inside >> v & 1:
            continue
        row = g.adj[v]
        if all((m & ~row).bit_count() <= a for m in masks):
            out.append(v)
    return out


def trace_classes(g: Graph, X: Template, Z: Sequence[int]) -> dict[int, list[int]]:
    """Bucket Z by N(z) ∩ X (as a mask)."""
    inside = X.mask
    classes: dict[int, list[int]] = {}
    for z in sorted(Z):
        classes.setdefault(g.adj[z] & inside, []).append(z)
    return classes


def independent_s_set(g: Graph, J: Sequence[int], s: int, cap: int | None = None) -> list[int] | None:
    """An independent set of size >= s inside J (at most ``cap`` vertices):
    greedy in increasing-degree order, then an exact search for exactly s
    vertices if greedy falls short."""
    vs = sorted(set(J))
    h = g.induced(vs)
    cap = h.n if cap is None else max(cap, s)
    greedy: list[int] = []
    blocked = 0
    for v in sorted(range(h.n), key=lambda u: (h.degree(u), u)):
        if not blocked >> v & 1:
            greedy.append(v)
            blocked |= h.adj[v] | bit(v)
            if len(greedy) == cap:
                break
    if len(greedy) >= s:
        return [vs[v] for v in sorted(greedy)]

    def rec(cand: int, chosen: list[int]) -> list[int] | None:
        if len(chosen) == s:
            return list(chosen)
        while cand.bit_count() >= s - len(chosen):
            v = lowest(cand)
            cand &= ~bit(v)
            chosen.append(v)
            out = rec(cand & ~h.adj[v], chosen)
            if out is not None:
                return out
            chosen.pop()
        return None

    found = rec(h.vertex_mask, [])
    return [vs[v] for v in found] if found is not None else None


def grow_template(g: Graph, X: Template, Z: Sequence[int], s: int, a: int, *,
                  guards: Guards | None = None) -> Template:
    """Grow X by one part drawn from Z.

    Z is bucketed by its trace on X; inside each bucket (largest first) an
    independent set I is found, and once |I| >= s the parts are trimmed to
    the common neighbourhood of I and I is appended as part r+1. Buckets up
    to the colouring guard get a maximum independent set; larger ones get
    :func:`independent_s_set`.
    """
    limit = resolve(guards).max_colour_vertices
    for i, p in enumerate(X.parts):
        if len(p) != s + a:
            raise TemplateError(f"part {i} has {len(p)} vertices, expected s+a={s + a}")
    masks = [mask_of(p) for p in X.parts]
    for z in Z:
        if X.mask >> z & 1:
            raise TemplateError(f"vertex {z} of Z lies in the template")
        if any((m & ~g.adj[z]).bit_count() > a for m in masks):
            raise TemplateError(f"vertex {z} has more than a={a} non-neighbours in some part")
    if not Z:
        raise TemplateGrowthError("Z is empty")
    classes = trace_classes(g, X, Z)
    ranked = sorted(classes.items(), key=lambda kv: (-len(kv[1]), kv[1][0]))
    best: list[int] = []
    best_class: list[int] = []
    for trace_mask, J in ranked:
        if len(J) < s:
            break
        if len(J) <= limit:
            indep = max_independent_set(g, J)
        else:
            indep = independent_s_set(g, J, s, cap=limit) or []
        if len(indep) > len(best):
            best, best_class = indep, J
        if len(indep) >= s:
            parts = [[u for u in p if trace_mask >> u & 1] for p in X.parts]
            return Template.of(parts + [indep])
    raise TemplateGrowthError(
        f"no trace class holds an independent set of size {s}; best is {len(best)} "
        f"(largest class has {len(ranked[0][1])} vertices)", best_class, len(best))


def find_kss(g: Graph, s: int, *, guards: Guards | None = None) -> tuple[list[int], list[int]] | None:
    """Disjoint s-sets U, W with U complete to W (edges inside U or W allowed).

    Backtracks over U in lexicographic order, pruning whenever the common
    neighbourhood of the partial U has fewer than s vertices.
    """
    resolve(guards).check("max_kss_vertices", g.n)
    if s <= 0:
        return [], []
    adj = g.adj
    eligible = [v for v in range(g.n) if g.degree(v) >= s]
    found: list[tuple[list[int], list[int]]] = []

    def rec(U: list[int], common: int, start: int) -> bool:
        if len(U) == s:
            W = list(iter_bits(common))[:s]
            found.append((list(U), W))
            return True
        for idx in range(start, len(eligible)):
            if len(eligible) - idx < s - len(U):
                return False
            v = eligible[idx]
            nxt = common & adj[v]
            if nxt.bit_count() < s:
                continue
            U.append(v)
            if rec(U, nxt, idx + 1):
                return True
            U.pop()
        return False

    if rec([], g.vertex_mask, 0):
        return found[0]
    return None


def extract_induced_biclique(g: Graph, U: Sequence[int], W: Sequence[int], f: int) -> Template:
    """Induced K(f, f) inside the biclique (U, W): a maximum independent set
    in each side, truncated to f vertices."""
    wm = mask_of(W)
    if any(g.adj[u] & wm != wm for u in U):
        raise TemplateError("U is not complete to W")
    side_u = max_independent_set(g, U)
    side_w = max_independent_set(g, W)
    if len(side_u) < f or len(side_w) < f:
        raise BicliqueNotFound(
            f"largest independent sets in the sides have sizes {len(side_u)} and {len(side_w)}; "
            f"need {f}")
    X = Template.of([side_u[:f], side_w[:f]])
    if not is_template(g, X):
        raise TemplateError("extracted biclique is not induced")
    return X


def part_size_law(f: int, a: int, r: int) -> int:
    """Template part size f - a(r-2) for an r-part template."""
    return f - a * (r - 2)


def find_multipartite(g: Graph, r: int, m: int, *, budget: int = 200_000) -> Template | None:
    """Exhaustive search for an induced complete r-partite subgraph with every
    part of size exactly m. Returns None if none exists; raises
    :class:`TemplateError` when the node budget runs out."""
    if r <= 0 or m <= 0:
        return None
    adj = g.adj
    full = g.vertex_mask
    nodes = 0

    def independent_sets(cand: int, k: int, chosen: list[int]):
        # k-subsets of cand that are independent, lexicographic
        nonlocal nodes
        nodes += 1
        if nodes > budget:
            raise TemplateError(f"template search exceeded budget of {budget} nodes")
        if k == 0:
            yield list(chosen)
            return
        rest = cand
        while rest.bit_count() >= k:
            v = lowest(rest)
            rest &= ~bit(v)
            chosen.append(v)
            yield from independent_sets(rest & ~adj[v], k - 1, chosen)
            chosen.pop()

    def rec(parts: list[list[int]], cand: int, floor: int) -> list[list[int]] | None:
        if len(parts) == r:
            return parts
        # the next part's minimum vertex is larger than the previous part's,
        # which removes part-order symmetry
        pool = cand & ~((1 << (floor + 1)) - 1)
        while pool:
            if (cand.bit_count()) < m * (r - len(parts)):
                return None
            v = lowest(pool)
            pool &= ~bit(v)
            for rest in independent_sets(cand & ~adj[v] & ~((1 << (v + 1)) - 1), m - 1, []):
                part = [v] + rest
                common = cand
                for u in part:
                    common &= adj[u]
                if common.bit_count() < m * (r - len(parts) - 1):
                    continue
                out = rec(parts + [part], common, v)
                if out is not None:
                    return out
        return None

    found = rec([], full, -1)
    return Template.of(found) if found is not None else None


@dataclass
class TemplateSearch:
    template: Template
    steps: list[str] = field(default_factory=list)
    exhaustive: bool = False


def max_template(g: Graph, f: int, a: int, omega: int, start: Template, *,
                 guards: Guards | None = None) -> TemplateSearch:
    """Grow ``start`` (an induced K(f, f)) into a maximal template whose r parts
    each have exactly f - a(r-2) vertices.

    Growth uses :func:`grow_template` on the current Z until it fails or
    r reaches omega; then an exhaustive search for r+1, r+2, ... parts (under
    the guard budget) confirms or improves maximality.
    """
    guards = resolve(guards)
    if f < a + 2:
        raise TemplateError(f"f={f} must be at least a+2={a + 2}")
    if start.r != 2 or start.sizes() != [f, f] or not is_template(g, start):
        raise TemplateError("start must be an induced K(f, f)")
    search = TemplateSearch(start, [f"start: induced K({f},{f})"])
    X = start
    while X.r < omega:
        size = part_size_law(f, a, X.r)
        nxt = part_size_law(f, a, X.r + 1)
        if nxt <= 0:
            search.steps.append(f"stop: part size law gives {nxt} for r={X.r + 1}")
            break
        Z = z_set(g, X, a)
        try:
            grown = grow_template(g, X, Z, size - a, a, guards=guards)
        except TemplateGrowthError as exc:
            search.steps.append(f"r={X.r}: growth failed ({exc.reason})")
            break
        X = Template.of([p[:nxt] for p in grown.parts])
        search.steps.append(f"r={X.r}: grown from {len(Z)} Z-vertices")
    search.template = X
    r = search.template.r + 1
    if r > omega or part_size_law(f, a, r) <= 0:
        search.exhaustive = True
        search.steps.append(f"r={r - 1} is already the cap (omega={omega})")
        return search
    try:
        while r <= omega and part_size_law(f, a, r) > 0:
            bigger = find_multipartite(g, r, part_size_law(f, a, r),
                                       budget=guards.template_search_budget)
            if bigger is None:
                break
            search.template = bigger
            search.steps.append(f"exhaustive search found r={r}")
            r += 1
        search.exhaustive = True
        if r <= omega and part_size_law(f, a, r) > 0:
            search.steps.append(f"exhaustive search: no template with r={r}")
    except TemplateError as exc:
        search.steps.append(f"exhaustive search abandoned: {exc}")
    return search
