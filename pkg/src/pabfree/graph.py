"""Immutable simple graphs over dense integer vertex ids, plus generators.

Adjacency is stored as one int bitmask per vertex. All set-valued results are
returned sorted ascending.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from ._bits import bit, iter_bits, mask_of
from .rng import draw

APEX = "apex"
PAIR = "pair"
A_PART = "A-part"
B_PART = "B-part"


class GraphError(ValueError):
    """Invalid graph construction input."""


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    # origin[i] is the id of vertex i in the graph this one was extracted from
    origin: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows for {self.n} vertices")

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in iter_bits(self.adj[u] >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def neighbourhood(self, vertices: Iterable[int]) -> list[int]:
        """N(S): vertices outside S with a neighbour in S."""
        s = mask_of(vertices)
        m = 0
        for v in iter_bits(s):
            m |= self.adj[v]
        return list(iter_bits(m & ~s))

    def is_independent(self, vertices: Iterable[int]) -> bool:
        s = mask_of(vertices)
        return all(not (self.adj[v] & s) for v in iter_bits(s))

    def is_clique(self, vertices: Iterable[int]) -> bool:
        s = mask_of(vertices)
        return all((self.adj[v] | bit(v)) & s == s for v in iter_bits(s))

    def is_complete(self) -> bool:
        full = self.vertex_mask
        return all(self.adj[v] | bit(v) == full for v in range(self.n))

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple(full & ~m & ~bit(v) for v, m in enumerate(self.adj)))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph on ``vertices``, relabelled 0..k-1 in ascending order.

        ``origin`` maps the new ids back to ids of ``self`` (composed with any
        existing origin so it always points at the root graph).
        """
        vs = sorted(set(vertices))
        index = {v: i for i, v in enumerate(vs)}
        adj = []
        for v in vs:
            m = 0
            for u in iter_bits(self.adj[v]):
                j = index.get(u)
                if j is not None:
                    m |= 1 << j
            adj.append(m)
        root = self.origin
        origin = tuple(root[v] for v in vs) if root is not None else tuple(vs)
        return Graph(len(vs), tuple(adj), origin)

    def to_root(self, v: int) -> int:
        return self.origin[v] if self.origin is not None else v

    def components(self, within: int | None = None) -> list[list[int]]:
        """Connected components of the subgraph induced by ``within`` (a mask)."""
        rest = self.vertex_mask if within is None else within
        comps = []
        while rest:
            start = rest & -rest
            seen = start
            frontier = start
            while frontier:
                nxt = 0
                for v in iter_bits(frontier):
                    nxt |= self.adj[v]
                nxt &= rest & ~seen
                seen |= nxt
                frontier = nxt
            comps.append(list(iter_bits(seen)))
            rest &= ~seen
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


def build_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    adj = [0] * n
    for e in edges:
        u, v = e
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"self-loop {(u, v)}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_adjacency_masks(adj: Sequence[int]) -> Graph:
    return Graph(len(adj), tuple(adj))


@dataclass(frozen=True)
class PatternPab:
    """The graph P(a, b) together with the role of each vertex.

    Vertex 0 is the apex, 1 and 2 are the pair {x, y}, then ``a`` A-part
    vertices, then ``b`` B-part vertices.
    """

    a: int
    b: int
    underlying: Graph
    roles: tuple[str, ...]

    @property
    def apex(self) -> int:
        return 0

    @property
    def pair(self) -> tuple[int, int]:
        return (1, 2)

    @property
    def a_part(self) -> tuple[int, ...]:
        return tuple(range(3, 3 + self.a))

    @property
    def b_part(self) -> tuple[int, ...]:
        return tuple(range(3 + self.a, 3 + self.a + self.b))

    def label(self, v: int) -> str:
        role = self.roles[v]
        if role == APEX:
            return "apex"
        if role == PAIR:
            return "xy"[v - 1]
        if role == A_PART:
            return f"A{v - 3}"
        return f"B{v - 3 - self.a}"


def gen_pattern(a: int, b: int) -> PatternPab:
    if a < 1 or b < 1:
        raise GraphError(f"P(a, b) needs a >= 1 and b >= 1, got a={a}, b={b}")
    apex, x, y = 0, 1, 2
    A = range(3, 3 + a)
    B = range(3 + a, 3 + a + b)
    edges = [(apex, x), (apex, y)]
    edges += [(p, u) for p in (x, y) for u in A]
    edges += [(u, w) for u in A for w in B]
    roles = (APEX, PAIR, PAIR) + (A_PART,) * a + (B_PART,) * b
    return PatternPab(a, b, build_graph(3 + a + b, edges), roles)


def gen_subdivision(g: Graph, lengths: Mapping[tuple[int, int], int], seed: int = 0) -> Graph:
    """Replace each listed edge uv by a path with ``lengths[uv]`` edges.

    Fresh vertices are appended after the existing ids, edges processed in
    ascending order. ``seed`` is accepted for interface symmetry with the
    other generators; the construction is deterministic.
    """
    norm: dict[tuple[int, int], int] = {}
    for (u, v), length in lengths.items():
        if not (0 <= u < g.n and 0 <= v < g.n):
            raise GraphError(f"edge {(u, v)} has an endpoint outside the graph")
        if not g.has_edge(u, v):
            raise GraphError(f"{(u, v)} is not an edge of the graph")
        if length < 1:
            raise GraphError(f"edge {(u, v)} given length {length}; lengths must be >= 1")
        norm[(min(u, v), max(u, v))] = length
    edges = []
    nxt = g.n
    for u, v in g.edges():
        length = norm.get((u, v), 1)
        if length == 1:
            edges.append((u, v))
            continue
        chain = [u] + list(range(nxt, nxt + length - 1)) + [v]
        nxt += length - 1
        edges.extend(zip(chain, chain[1:]))
    return build_graph(nxt, edges)


def gen_complete_multipartite(sizes: Sequence[int]) -> Graph:
    if not sizes:
        raise GraphError("complete multipartite graph needs at least one part")
    if any(s < 1 for s in sizes):
        raise GraphError(f"part sizes must be positive, got {list(sizes)}")
    n = sum(sizes)
    full = (1 << n) - 1
    adj = []
    start = 0
    for s in sizes:
        part = ((1 << s) - 1) << start
        adj.extend([full & ~part] * s)
        start += s
    return Graph(n, tuple(adj))


def part_ranges(sizes: Sequence[int]) -> list[list[int]]:
    out, start = [], 0
    for s in sizes:
        out.append(list(range(start, start + s)))
        start += s
    return out


def gen_random(n: int, p: float, seed: int) -> Graph:
    """G(n, p) sample: pair (i, j), i < j, in lexicographic order k = 0, 1, ...
    is an edge iff the 53-bit uniform from SplitMix64 draw k under ``seed``
    is below ``p``."""
    if not 0.0 <= p <= 1.0:
        raise GraphError(f"edge probability {p} outside [0, 1]")
    adj = [0] * n
    k = 0
    scale = 1.0 / (1 << 53)
    for i in range(n):
        for j in range(i + 1, n):
            if (draw(seed, k) >> 11) * scale < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, tuple(adj))


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, tuple(full & ~(1 << v) for v in range(n)))


def cycle_graph(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return build_graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(m << offset for m in g.adj)
        offset += g.n
    return Graph(offset, tuple(adj))


def add_edges(g: Graph, n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Extend ``g`` to ``n`` vertices and add ``edges``."""
    return build_graph(n, list(g.edges()) + [tuple(e) for e in edges])


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Copy of g with vertex v renamed perm[v]."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError("relabel needs a permutation of the vertices")
    return build_graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


@dataclass(frozen=True)
class TraceProfile:
    """Neighbour / non-neighbour counts of one vertex against a list of parts."""

    neighbours: tuple[int, ...]
    non_neighbours: tuple[int, ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(d + nn for d, nn in zip(self.neighbours, self.non_neighbours))

    def a_connected(self, i: int, a: int) -> bool:
        """At most ``a`` neighbours in part ``i``."""
        return self.neighbours[i] <= a

    def a_disconnected(self, i: int, a: int) -> bool:
        """At most ``a`` non-neighbours in part ``i``."""
        return self.non_neighbours[i] <= a


def trace(g: Graph, v: int, parts: Sequence[Iterable[int]]) -> TraceProfile:
    nb, nn = [], []
    row = g.adj[v]
    for part in parts:
        m = mask_of(part)
        if m >> v & 1:
            raise GraphError(f"vertex {v} lies inside a part")
        d = (row & m).bit_count()
        nb.append(d)
        nn.append(m.bit_count() - d)
    return TraceProfile(tuple(nb), tuple(nn))
