"""Shared helpers for the test-suite: networkx conversion, isomorphism-class
catalogs and a few brute-force oracles that share no code with the package."""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import networkx as nx

from pabfree.graph import Graph, build_graph

N8_CLASSES = 12346  # number of unlabelled graphs on 8 vertices (OEIS A000088)


def from_nx(h: nx.Graph) -> Graph:
    index = {v: i for i, v in enumerate(sorted(h.nodes()))}
    return build_graph(len(index), [(index[u], index[v]) for u, v in h.edges()])


def to_nx(g: Graph) -> nx.Graph:
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


@lru_cache(maxsize=None)
def atlas(n_max: int = 7) -> tuple[Graph, ...]:
    """One graph per isomorphism class on at most n_max <= 7 vertices."""
    return tuple(from_nx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() <= n_max)


@lru_cache(maxsize=None)
def catalog(n: int) -> tuple[Graph, ...]:
    """One graph per isomorphism class on exactly n <= 8 vertices."""
    if n <= 7:
        return tuple(g for g in atlas(7) if g.n == n)
    if n != 8:
        raise ValueError("catalog only goes up to 8 vertices")
    import pynauty

    seen: dict[bytes, Graph] = {}
    for base in catalog(7):
        edges = base.edges()
        for sub in range(1 << 7):
            g = build_graph(8, edges + [(v, 7) for v in range(7) if sub >> v & 1])
            adj = {v: g.neighbours(v) for v in range(8)}
            cert = pynauty.certificate(pynauty.Graph(8, adjacency_dict=adj))
            seen.setdefault(cert, g)
    return tuple(seen[c] for c in sorted(seen))


def brute_connectivity(g: Graph) -> int | None:
    """Smallest vertex set whose deletion leaves >= 2 vertices in >= 2
    components; None for complete graphs (no such set). Plain set code."""
    nbrs = [set(g.neighbours(v)) for v in range(g.n)]
    verts = set(range(g.n))

    def connected(keep: set[int]) -> bool:
        start = next(iter(keep))
        stack, seen = [start], {start}
        while stack:
            v = stack.pop()
            for u in nbrs[v] & keep:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return seen == keep

    for size in range(g.n - 1):
        for cut in combinations(range(g.n), size):
            keep = verts - set(cut)
            if len(keep) >= 2 and not connected(keep):
                return size
    return None


def brute_k_connected(g: Graph, k: int) -> bool:
    cut = brute_connectivity(g)
    if cut is None:
        return g.n >= k + 1
    return cut >= k


def brute_clique_number(g: Graph) -> int:
    for size in range(g.n, 0, -1):
        for vs in combinations(range(g.n), size):
            if all(g.has_edge(u, v) for u, v in combinations(vs, 2)):
                return size
    return 0


def brute_chromatic_number(g: Graph) -> int:
    """Smallest k admitting a proper k-colouring, by plain backtracking."""
    if g.n == 0:
        return 0
    nbrs = [g.neighbours(v) for v in range(g.n)]
    for k in range(1, g.n + 1):
        colour = [-1] * g.n

        def place(v: int) -> bool:
            if v == g.n:
                return True
            for c in range(k):
                if all(colour[u] != c for u in nbrs[v]):
                    colour[v] = c
                    if place(v + 1):
                        return True
            colour[v] = -1
            return False

        if place(0):
            return k
    return g.n
