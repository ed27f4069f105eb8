"""Attachment of outside vertices to a complete multipartite template.

Covers the adjacency trichotomy for a complete pair of independent sets,
the per-part adjacency types against a template, and the Z / C / A / M
classification of every vertex outside the template.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .._bits import mask_of
from ..graph import Graph, TraceProfile, gen_pattern, trace
from ..subdivision import SubdivisionWitness
from .template import Template

EXEMPT = "exempt"
ONE_CONNECTED = "one_connected"
NEARLY_COMPLETE = "nearly_complete"
VIOLATION = "violation"

Z = "Z"
C = "C"
A_FREE = "A"
M = "M"
INVALID = "invalid"


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class Trichotomy:
    kind: str
    witness: SubdivisionWitness | None = None


def pab_witness(a: int, apex_path: Sequence[int], x: int, y: int,
                a_part: Sequence[int], b_part: Sequence[int]) -> SubdivisionWitness:
    """Witness for P(a, a) whose only subdivided edges are apex-x and apex-y.

    ``apex_path`` runs from x to y through the apex path; its second vertex is
    used as the apex, so it must have at least three vertices.
    """
    p = gen_pattern(a, a)
    apex = apex_path[1]
    branch = {p.apex: apex, 1: x, 2: y}
    for v, w in zip(p.a_part, a_part):
        branch[v] = w
    for v, w in zip(p.b_part, b_part):
        branch[v] = w
    paths: dict[tuple[int, int], tuple[int, ...]] = {}
    for u, v in p.underlying.edges():
        if (u, v) == (0, 1):
            paths[(u, v)] = (apex, x)
        elif (u, v) == (0, 2):
            paths[(u, v)] = tuple(apex_path[1:])
        else:
            paths[(u, v)] = (branch[u], branch[v])
    return SubdivisionWitness(dict(sorted(branch.items())), dict(sorted(paths.items())))


def check_adjacency_trichotomy(g: Graph, A_set: Sequence[int], B_set: Sequence[int],
                               v: int, a: int) -> Trichotomy:
    """Classify v against the complete pair (A_set, B_set).

    ``exempt``: fewer than a non-neighbours in A_set. Otherwise v must have at
    most one neighbour in B_set (``one_connected``) or at most a-1
    non-neighbours there (``nearly_complete``); anything else is a
    ``violation`` and comes with the P(a, a) it induces.
    """
    A, B = sorted(A_set), sorted(B_set)
    if v in A or v in B:
        raise PreconditionError(f"vertex {v} lies in A_set or B_set")
    if set(A) & set(B):
        raise PreconditionError("A_set and B_set intersect")
    if not g.is_independent(A):
        raise PreconditionError("A_set is not independent")
    if not g.is_independent(B):
        raise PreconditionError("B_set is not independent")
    bm = mask_of(B)
    if any(g.adj[u] & bm != bm for u in A):
        raise PreconditionError("A_set is not complete to B_set")
    non_a = [u for u in A if not g.has_edge(v, u)]
    if len(non_a) < a:
        return Trichotomy(EXEMPT)
    nb = [u for u in B if g.has_edge(v, u)]
    non_b = [u for u in B if not g.has_edge(v, u)]
    if len(nb) <= 1:
        return Trichotomy(ONE_CONNECTED)
    if len(non_b) <= a - 1:
        return Trichotomy(NEARLY_COMPLETE)
    y1, y2 = nb[:2]
    w = pab_witness(a, (y1, v, y2), y1, y2, non_a[:a], non_b[:a])
    return Trichotomy(VIOLATION, w)


@dataclass(frozen=True)
class AdjacencyType:
    """Per-part adjacency type of one vertex against a template, with the
    outcome of each of the three statements (a), (b), (c)."""

    in_z: bool
    profile: TraceProfile
    heavy_parts: tuple[int, ...]  # parts holding >= a non-neighbours
    statement_a: bool
    statement_b: bool
    statement_c: bool
    witness: SubdivisionWitness | None = None

    @property
    def holds(self) -> bool:
        return self.in_z or (self.statement_a and self.statement_b and self.statement_c)


def _check_parts(X: Template, a: int) -> None:
    small = [i for i, p in enumerate(X.parts) if len(p) < a + 1]
    if small:
        raise PreconditionError(f"template parts {small} have fewer than a+1={a + 1} vertices")


def check_adjacency_type(g: Graph, X: Template, v: int, a: int,
                         z_threshold: int | None = None) -> AdjacencyType:
    """Check the adjacency-type statements for v.

    Z membership means at most ``z_threshold`` non-neighbours in every part
    (default a-1, the lemma's own definition; the main pipeline uses a).
    Statements (b) and (c) are checked for every part that could play X_i.
    """
    _check_parts(X, a)
    zt = a - 1 if z_threshold is None else z_threshold
    prof = trace(g, v, X.parts)
    nn, d = prof.non_neighbours, prof.neighbours
    in_z = all(x <= zt for x in nn)
    heavy = tuple(i for i, x in enumerate(nn) if x >= a)
    if in_z:
        return AdjacencyType(True, prof, heavy, True, True, True)
    st_a = bool(heavy)
    st_b = st_c = True
    witness = None
    for i in heavy:
        for j in range(X.r):
            if j == i:
                continue
            if not (d[j] <= 1 or nn[j] <= a - 1):
                st_b = False
                witness = witness or check_adjacency_trichotomy(g, X.parts[i], X.parts[j], v, a).witness
            if d[j] <= 1 and d[i] > 1:
                st_c = False
                witness = witness or check_adjacency_trichotomy(g, X.parts[j], X.parts[i], v, a).witness
    return AdjacencyType(False, prof, heavy, st_a, st_b, st_c, witness)


@dataclass(frozen=True)
class Classification:
    kind: str
    i: int | None = None
    j: int | None = None
    reason: str = ""
    witness: SubdivisionWitness | None = None

    @property
    def label(self) -> str:
        if self.kind == C:
            return f"C({self.i})"
        if self.kind == M:
            return f"M({self.i},{self.j})"
        return self.kind


def classify_profile(prof: TraceProfile, a: int) -> Classification:
    """Z / C(i) / A / M(i, j) / invalid, as a pure function of the trace."""
    nn, d = prof.non_neighbours, prof.neighbours
    r = len(nn)
    if all(x <= a for x in nn):
        return Classification(Z)
    heavy = [i for i in range(r) if nn[i] >= a]
    if len(heavy) == 1:
        return Classification(C, heavy[0])
    bad = [i for i in heavy if d[i] > 1]
    if bad:
        return Classification(INVALID, reason=(
            f"at least {a} non-neighbours in parts {heavy} but {d[bad[0]]} neighbours in part {bad[0]}"))
    if len(heavy) == r:
        return Classification(A_FREE)
    i = min(k for k in range(r) if nn[k] <= a - 1)
    j = min(k for k in range(r) if d[k] <= 1)
    return Classification(M, i, j)


def classify_vertex(g: Graph, X: Template, v: int, a: int) -> Classification:
    _check_parts(X, a)
    if v in X.vertex_set:
        raise PreconditionError(f"vertex {v} lies in the template")
    cls = classify_profile(trace(g, v, X.parts), a)
    if cls.kind == INVALID:
        prof = trace(g, v, X.parts)
        heavy = [i for i in range(X.r) if prof.non_neighbours[i] >= a]
        bad = next(i for i in heavy if prof.neighbours[i] > 1)
        other = next(i for i in heavy if i != bad)
        w = check_adjacency_trichotomy(g, X.parts[other], X.parts[bad], v, a).witness
        cls = Classification(INVALID, reason=cls.reason, witness=w)
    return cls


class InvalidAttachment(ValueError):
    def __init__(self, vertex: int, classification: Classification):
        super().__init__(f"vertex {vertex} cannot attach to the template: {classification.reason}")
        self.vertex = vertex
        self.classification = classification


@dataclass
class AttachmentPartition:
    Z: list[int] = field(default_factory=list)
    C: dict[int, list[int]] = field(default_factory=dict)
    A_free: list[int] = field(default_factory=list)
    M: dict[tuple[int, int], list[int]] = field(default_factory=dict)
    labels: dict[int, Classification] = field(default_factory=dict)

    def all_vertices(self) -> list[int]:
        return sorted(self.labels)

    def class_of(self, v: int) -> Classification:
        return self.labels[v]


def partition_attachment(g: Graph, X: Template, a: int) -> AttachmentPartition:
    _check_parts(X, a)
    part = AttachmentPartition()
    inside = X.vertex_set
    for v in range(g.n):
        if v in inside:
            continue
        cls = classify_vertex(g, X, v, a)
        if cls.kind == INVALID:
            raise InvalidAttachment(v, cls)
        part.labels[v] = cls
        if cls.kind == Z:
            part.Z.append(v)
        elif cls.kind == C:
            part.C.setdefault(cls.i, []).append(v)
        elif cls.kind == A_FREE:
            part.A_free.append(v)
        else:
            part.M.setdefault((cls.i, cls.j), []).append(v)
    part.C = dict(sorted(part.C.items()))
    part.M = dict(sorted(part.M.items()))
    return part
