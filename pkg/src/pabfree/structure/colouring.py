"""The two constructive colouring branches: dominating-set colouring around a
template, and greedy colouring along a degeneracy order."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .._bits import bit, iter_bits, lowest
from ..graph import Graph
from ..oracles import ColouringCertificate, chromatic_number
from .lemmas import PreconditionError, partition_attachment
from .template import Template

Colourer = Callable[[Graph], ColouringCertificate]


class DominationError(ValueError):
    pass


class DegeneracyError(ValueError):
    def __init__(self, d: int, core: list[int]):
        super().__init__(f"graph is not {d - 1}-degenerate: vertices {core} induce "
                         f"minimum degree >= {d}")
        self.d = d
        self.core = core


@dataclass(frozen=True)
class DominatingColouring:
    certificate: ColouringCertificate
    S: tuple[int, ...]
    dominator: dict[int, int]
    palette_sizes: dict[int, int]

    @property
    def tau_used(self) -> int:
        return max(self.palette_sizes.values(), default=0)


def dominating_colouring(g: Graph, X: Template, a: int,
                         subcolour: Colourer | None = None) -> DominatingColouring:
    """Colour g from a dominating set S made of a+1 vertices per template part.

    Every vertex outside S is assigned to its smallest neighbour in S; the
    vertices assigned to s in S are coloured by ``subcolour`` (exact colouring
    by default) on a palette private to s, and each vertex of S gets one more
    colour of its own.
    """
    subcolour = subcolour or chromatic_number
    if any(len(p) < a + 1 for p in X.parts):
        raise PreconditionError(f"template parts need at least a+1={a + 1} vertices")
    partition = partition_attachment(g, X, a)
    if partition.A_free:
        raise PreconditionError(f"attachment class A is non-empty: {partition.A_free}")
    S = sorted(v for p in X.parts for v in p[: a + 1])
    s_mask = sum(bit(v) for v in S)
    dominator: dict[int, int] = {}
    for v in range(g.n):
        if s_mask >> v & 1:
            continue
        hit = g.adj[v] & s_mask
        if not hit:
            raise DominationError(f"vertex {v} has no neighbour in S")
        dominator[v] = lowest(hit)

    colour = [-1] * g.n
    nxt = 0
    palette_sizes: dict[int, int] = {}
    for s in S:
        group = [v for v, d in dominator.items() if d == s]
        if group:
            sub = g.induced(group)
            cert = subcolour(sub)
            if not cert.is_proper(sub):
                raise ValueError("subcolour returned an improper colouring")
            relabel = {c: i for i, c in enumerate(sorted(set(cert.colour)))}
            for local, v in enumerate(group):
                colour[v] = nxt + relabel[cert.colour[local]]
            palette_sizes[s] = len(relabel)
            nxt += len(relabel)
        else:
            palette_sizes[s] = 0
    for s in S:
        colour[s] = nxt
        nxt += 1
    return DominatingColouring(ColouringCertificate(tuple(colour)), tuple(S), dominator, palette_sizes)


def degeneracy_order(g: Graph) -> tuple[list[int], int]:
    """Min-degree peeling order (smallest id on ties) and the degeneracy."""
    alive = g.vertex_mask
    order = []
    degen = 0
    while alive:
        v = min(iter_bits(alive), key=lambda u: ((g.adj[u] & alive).bit_count(), u))
        degen = max(degen, (g.adj[v] & alive).bit_count())
        order.append(v)
        alive &= ~bit(v)
    return order, degen


def degeneracy_colouring(g: Graph, d: int) -> ColouringCertificate:
    """Greedy colouring in reverse peeling order, using at most d colours.

    Raises :class:`DegeneracyError` if peeling meets a subgraph of minimum
    degree >= d.
    """
    alive = g.vertex_mask
    order = []
    while alive:
        v = min(iter_bits(alive), key=lambda u: ((g.adj[u] & alive).bit_count(), u))
        if (g.adj[v] & alive).bit_count() >= d:
            raise DegeneracyError(d, list(iter_bits(alive)))
        order.append(v)
        alive &= ~bit(v)
    colour = [-1] * g.n
    for v in reversed(order):
        taken = 0
        for u in iter_bits(g.adj[v]):
            if colour[u] >= 0:
                taken |= bit(colour[u])
        colour[v] = lowest(~taken)
    return ColouringCertificate(tuple(colour))
