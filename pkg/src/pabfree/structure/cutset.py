"""Neighbourhood counts of a component Q of the free class A, the four
per-class bounds, witness constructions for violated bounds, and the
separation check for N(Q)."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Sequence

from .._bits import bit, iter_bits, mask_of
from ..graph import Graph
from ..subdivision import SubdivisionWitness, validate_witness
from ..graph import gen_pattern
from .bounds import BoundSheet
from .lemmas import AttachmentPartition, PreconditionError, pab_witness
from .template import Template


@dataclass
class ClaimCheck:
    name: str
    counts: dict[str, int]
    bound: int
    bound_ok: bool
    trigger: str | None = None
    witness: SubdivisionWitness | None = None
    witness_valid: bool | None = None
    note: str = ""

    @property
    def passed(self) -> bool:
        return self.bound_ok and self.trigger is None


@dataclass
class CutsetReport:
    Q: list[int]
    neighbourhood: list[int]
    in_Z: int
    in_X: list[int]
    in_C: dict[int, int]
    in_M: dict[tuple[int, int], int]
    claims: dict[str, ClaimCheck] = field(default_factory=dict)
    separates: bool = False
    cutset_below_b: bool = False

    @property
    def all_claims_pass(self) -> bool:
        return all(c.passed for c in self.claims.values())

    def witnesses(self) -> list[SubdivisionWitness]:
        return [c.witness for c in self.claims.values() if c.witness is not None]


def _nmask(g: Graph, vertices: Sequence[int] | int) -> int:
    """Union of neighbourhoods (open, may overlap the set itself)."""
    m = 0
    src = vertices if isinstance(vertices, int) else mask_of(vertices)
    for v in iter_bits(src):
        m |= g.adj[v]
    return m


def _distances(g: Graph, target: int, within: int) -> dict[int, int]:
    dist = {target: 0}
    queue = deque([target])
    while queue:
        v = queue.popleft()
        for u in iter_bits(g.adj[v] & within):
            if u not in dist:
                dist[u] = dist[v] + 1
                queue.append(u)
    return dist


def shortest_path(g: Graph, x: int, y: int, interior: int) -> list[int] | None:
    """Lexicographically least shortest x-y path with interior in ``interior``."""
    if g.has_edge(x, y):
        return [x, y]
    dist_y = _distances(g, y, interior | bit(x))
    if x not in dist_y:
        return None
    # greedy walk from x, always to the smallest vertex one step closer to y
    path = [x]
    cur = x
    while cur != y:
        d = dist_y[cur]
        cur = min(u for u in iter_bits(g.adj[cur] & (interior | bit(y)))
                  if dist_y.get(u, -1) == d - 1)
        path.append(cur)
    return path


def _claim4_construction(g: Graph, X: Template, Q: list[int], a: int) -> tuple[SubdivisionWitness | None, str]:
    q_mask = mask_of(Q)
    best = None
    for i, part in enumerate(X.parts):
        pm = mask_of(part)
        touching = [u for u in Q if g.adj[u] & pm]
        for u, w in combinations(touching, 2):
            if ((g.adj[u] | g.adj[w]) & pm).bit_count() < 2:
                continue
            P = shortest_path(g, u, w, q_mask & ~bit(u) & ~bit(w))
            if P is None:
                continue
            key = (len(P), i, P)
            if best is None or key < best:
                best = key
    if best is None:
        return None, "no path in Q with two neighbours in one part"
    _, i, P = best
    pm = mask_of(X.parts[i])
    x = min(iter_bits(g.adj[P[0]] & pm))
    y = min(v for v in iter_bits(g.adj[P[-1]] & pm) if v != x)
    near_p = _nmask(g, P)
    b_side = [v for v in X.parts[i] if v not in (x, y) and not near_p >> v & 1]
    for k in range(X.r):
        if k == i:
            continue
        a_side = [v for v in X.parts[k] if not near_p >> v & 1]
        if len(a_side) >= a and len(b_side) >= a:
            w = pab_witness(a, [x] + P + [y], x, y, a_side[:a], b_side[:a])
            return w, f"path {P} meets part {i} in {x} and {y}; A-part from part {k}"
    return None, f"path {P} found but parts are too small after trimming"


def _pair_construction(g: Graph, x: int, y: int, Q: list[int], a: int,
                       a_side: list[int], b_side: list[int]) -> SubdivisionWitness | None:
    if len(a_side) < a or len(b_side) < a:
        return None
    P = shortest_path(g, x, y, mask_of(Q))
    if P is None:
        return None
    return pab_witness(a, P, x, y, a_side[:a], b_side[:a])


def _claim5_construction(g: Graph, X: Template, Q: list[int], R: list[int], i: int, j: int,
                         a: int) -> tuple[SubdivisionWitness | None, str]:
    q_mask = mask_of(Q)
    for x, y in combinations(R, 2):
        if g.has_edge(x, y):
            continue
        P = shortest_path(g, x, y, q_mask)
        if P is None:
            continue
        near_int = _nmask(g, P[1:-1])
        near_p = _nmask(g, P)
        a_side = [v for v in X.parts[i]
                  if g.has_edge(v, x) and g.has_edge(v, y) and not near_int >> v & 1]
        b_side = [v for v in X.parts[j] if not near_p >> v & 1]
        w = _pair_construction(g, x, y, Q, a, a_side, b_side)
        if w is not None:
            return w, f"non-adjacent {x}, {y} in M({i},{j}) joined through Q by {P}"
        return None, f"non-adjacent {x}, {y} found but trimmed parts are too small"
    return None, "no non-adjacent pair"


def _claim6_construction(g: Graph, X: Template, Q: list[int], R: list[int], i: int,
                         a: int) -> tuple[SubdivisionWitness | None, str]:
    q_mask = mask_of(Q)
    near_q = _nmask(g, Q)
    part_i = X.parts[i]
    for x, y in combinations(R, 2):
        if g.has_edge(x, y):
            continue
        common_non = [v for v in part_i if not g.has_edge(v, x) and not g.has_edge(v, y)]
        if len(common_non) < a + 1:
            continue
        S = common_non[: a + 1]
        S_prime = [v for v in S if not near_q >> v & 1]
        P = shortest_path(g, x, y, q_mask)
        if P is None:
            continue
        near_int = _nmask(g, P[1:-1])
        for j in range(X.r):
            if j == i:
                continue
            a_side = [v for v in X.parts[j]
                      if g.has_edge(v, x) and g.has_edge(v, y) and not near_int >> v & 1]
            w = _pair_construction(g, x, y, Q, a, a_side, S_prime)
            if w is not None:
                return w, f"non-adjacent {x}, {y} in C({i}) share non-neighbours {S}; A-part from part {j}"
        return None, f"non-adjacent {x}, {y} share {S} but trimmed sets are too small"
    return None, "no non-adjacent pair with a+1 common non-neighbours"


def _reachable(g: Graph, sources: Sequence[int], removed: set[int]) -> set[int]:
    """Plain BFS over adjacency lists, skipping ``removed``."""
    nbrs = {v: g.neighbours(v) for v in range(g.n)}
    seen = set(sources)
    queue = deque(sources)
    while queue:
        v = queue.popleft()
        for u in nbrs[v]:
            if u not in seen and u not in removed:
                seen.add(u)
                queue.append(u)
    return seen


def separates(g: Graph, Q: Sequence[int], cut: Sequence[int], others: Sequence[int]) -> bool:
    """Does deleting ``cut`` disconnect every vertex of Q from every vertex of ``others``?"""
    removed = set(cut)
    targets = [v for v in others if v not in removed]
    if not Q or not targets:
        return False
    seen = _reachable(g, list(Q), removed)
    return not any(v in seen for v in targets)


def component_cutset_report(g: Graph, X: Template, partition: AttachmentPartition,
                            Q: Sequence[int], a: int, bounds: BoundSheet) -> CutsetReport:
    Q = sorted(Q)
    q_mask = mask_of(Q)
    free = set(partition.A_free)
    if not Q or not set(Q) <= free:
        raise PreconditionError("Q must be a non-empty subset of the free class A")
    if len(g.components(q_mask)) != 1:
        raise PreconditionError("Q is not connected")
    nq = g.neighbourhood(Q)
    if free & set(nq):
        raise PreconditionError("Q is not a whole component of A")
    nq_mask = mask_of(nq)

    in_z = (nq_mask & mask_of(partition.Z)).bit_count()
    in_x = [(nq_mask & mask_of(p)).bit_count() for p in X.parts]
    in_c = {i: (nq_mask & mask_of(vs)).bit_count() for i, vs in partition.C.items()}
    in_m = {ij: (nq_mask & mask_of(vs)).bit_count() for ij, vs in partition.M.items()}
    rep = CutsetReport(Q, nq, in_z, in_x, in_c, in_m)
    pattern = gen_pattern(a, a)

    def record(check: ClaimCheck) -> None:
        if check.witness is not None:
            check.witness_valid = bool(validate_witness(pattern, g, check.witness))
        rep.claims[check.name] = check

    record(ClaimCheck("claim3", {"Z": in_z}, bounds.claim3_bound, in_z <= bounds.claim3_bound))

    c4 = ClaimCheck("claim4", {f"X{i}": c for i, c in enumerate(in_x)}, 1, max(in_x, default=0) <= 1)
    if not c4.bound_ok:
        c4.trigger = "some part holds two neighbours of Q"
        c4.witness, c4.note = _claim4_construction(g, X, Q, a)
    record(c4)

    c5 = ClaimCheck("claim5", {f"M{i},{j}": c for (i, j), c in in_m.items()}, bounds.claim5_bound,
                    max(in_m.values(), default=0) <= bounds.claim5_bound)
    for (i, j), vs in partition.M.items():
        R = [v for v in vs if nq_mask >> v & 1]
        if any(not g.has_edge(x, y) for x, y in combinations(R, 2)):
            c5.trigger = f"N(Q) ∩ M({i},{j}) has a non-adjacent pair"
            c5.witness, c5.note = _claim5_construction(g, X, Q, R, i, j, a)
            break
    record(c5)

    c6 = ClaimCheck("claim6", {f"C{i}": c for i, c in in_c.items()}, bounds.claim6_bound,
                    max(in_c.values(), default=0) <= bounds.claim6_bound)
    for i, vs in partition.C.items():
        R = [v for v in vs if nq_mask >> v & 1]
        w, note = _claim6_construction(g, X, Q, R, i, a)
        if w is not None or note.startswith("non-adjacent"):
            c6.trigger = f"N(Q) ∩ C({i}) has a non-adjacent pair sharing a+1 non-neighbours"
            c6.witness, c6.note = w, note
            break
    record(c6)

    rep.separates = separates(g, Q, nq, sorted(X.vertex_set))
    rep.cutset_below_b = len(nq) < bounds.b
    return rep
