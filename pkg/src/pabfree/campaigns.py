"""Randomised verification campaigns and the instance constructors they use.

Instance ``i`` of a campaign draws everything from the stream
``derive_key(seed, kind_id, i)``, so any instance can be replayed alone and
produces the same sub-report byte for byte.
"""

from __future__ import annotations

import dataclasses
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction
from math import comb
from typing import Any, Callable

from ._bits import bit, iter_bits, mask_of
from .graph import (Graph, build_graph, gen_complete_multipartite, gen_pattern, gen_random,
                    gen_subdivision, part_ranges, relabel)
from .guards import Guards, resolve
from .oracles import chromatic_number, clique_number, naive_induced_subdivision
from .rng import CounterRNG
from .serialize import SCHEMA_VERSION, witness_json
from .structure.bounds import compute_bounds
from .structure.colouring import dominating_colouring
from .structure.cutset import component_cutset_report
from .structure.driver import neighbourhood_tau
from .structure.lemmas import (VIOLATION, check_adjacency_trichotomy, partition_attachment)
from .structure.template import Template, grow_template, template_violations
from .subdivision import SubdivisionWitness, detect_induced_subdivision, validate_witness

KINDS = ("lemma1", "witness", "growth", "claim2", "cutset", "detector", "chi")
KIND_ID = {k: i + 1 for i, k in enumerate(KINDS)}
DEFAULT_N = {
    "lemma1": (8, 16), "witness": (0, 4), "growth": (1, 2), "claim2": (1, 8),
    "cutset": (1, 6), "detector": (1, 9), "chi": (1, 10),
}


class CampaignConfigError(ValueError):
    pass


@dataclass(frozen=True)
class CampaignConfig:
    """``n_min``/``n_max`` mean host size for the random kinds, noise or
    outside-vertex count for the constructed ones and the template part count
    for growth."""

    kind: str
    seed: int = 0
    count: int = 100
    n_min: int | None = None
    n_max: int | None = None
    p_min: float = 0.1
    p_max: float = 0.9
    a: int = 2
    guard_overrides: dict[str, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise CampaignConfigError(f"unknown campaign kind {self.kind!r}; choose from {', '.join(KINDS)}")
        lo, hi = DEFAULT_N[self.kind]
        if self.n_min is None:
            object.__setattr__(self, "n_min", lo)
        if self.n_max is None:
            object.__setattr__(self, "n_max", hi)
        if self.count <= 0:
            raise CampaignConfigError(f"count must be positive, got {self.count}")
        if self.n_min < 0 or self.n_min > self.n_max:
            raise CampaignConfigError(f"empty size range [{self.n_min}, {self.n_max}]")
        if not 0.0 <= self.p_min <= self.p_max <= 1.0:
            raise CampaignConfigError(f"bad probability range [{self.p_min}, {self.p_max}]")
        if self.a < 2:
            raise CampaignConfigError(f"a must be at least 2, got {self.a}")
        if self.kind == "growth" and not 1 <= self.n_min <= self.n_max <= 2:
            raise CampaignConfigError("growth campaigns take template part counts in [1, 2]")
        Guards().override(**self.guard_overrides)

    @property
    def guards(self) -> Guards:
        return resolve(None).override(**self.guard_overrides)

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    @classmethod
    def from_dict(cls, d: dict) -> "CampaignConfig":
        names = {f.name for f in dataclasses.fields(cls)}
        unknown = set(d) - names
        if unknown:
            raise CampaignConfigError(f"unknown config field(s): {', '.join(sorted(unknown))}")
        return cls(**d)

    def rng(self, index: int) -> CounterRNG:
        return CounterRNG.from_seed(self.seed, KIND_ID[self.kind], index)


# -- constructors ---------------------------------------------------------------

def graph_from_lists(n: int, nbrs: list[set[int]]) -> Graph:
    adj = []
    for v in range(n):
        buf = bytearray((n + 7) // 8)
        for u in nbrs[v]:
            buf[u >> 3] |= 1 << (u & 7)
        adj.append(int.from_bytes(buf, "little"))
    return Graph(n, tuple(adj))


def random_relabel(g: Graph, rng: CounterRNG) -> tuple[Graph, list[int]]:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return relabel(g, perm), perm


def prune_to_member(g: Graph, a: int, rng: CounterRNG, protect: frozenset[int] = frozenset(),
                    guards: Guards | None = None) -> tuple[Graph, list[int]]:
    """Delete witness vertices (unprotected ones first) until no induced
    subdivision of P(a, a) is left. Returns the member and its original ids."""
    pattern = gen_pattern(a, a)
    alive = list(range(g.n))
    while True:
        h = g.induced(alive)
        w = detect_induced_subdivision(pattern, h, guards=guards)
        if w is None:
            return Graph(h.n, h.adj), alive
        hit = [alive[v] for v in w.vertices()]
        pool = [v for v in hit if v not in protect] or hit
        alive.remove(rng.choice(pool))


def planted_template_host(rng: CounterRNG, n: int, p: float, a: int) -> tuple[Graph, list[list[int]]]:
    """Complete multipartite core (2-3 parts of 2..a+3 vertices) plus random extra vertices."""
    r = rng.randint(2, 3)
    sizes = [rng.randint(2, a + 3) for _ in range(r)]
    while sum(sizes) > n and len(sizes) > 2:
        sizes.pop()
    while sum(sizes) > n:
        sizes[sizes.index(max(sizes))] -= 1
    core = gen_complete_multipartite(sizes)
    edges = list(core.edges())
    for v in range(core.n, n):
        edges += [(u, v) for u in range(v) if rng.bernoulli(p)]
    return build_graph(n, edges), part_ranges(sizes)


def biclique_configs(g: Graph, rng: CounterRNG, tries: int) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Random maximal pairs (A, B) of independent sets, A complete to B."""
    seeds = [v for v in range(g.n) if g.adj[v]]
    out = set()
    for _ in range(tries if seeds else 0):
        u = rng.choice(seeds)
        nb = g.neighbours(u)
        rng.shuffle(nb)
        B: list[int] = []
        for v in nb:
            if not any(g.has_edge(v, b) for b in B):
                B.append(v)
        common = g.vertex_mask
        for b in B:
            common &= g.adj[b]
        rest = [v for v in iter_bits(common) if v != u]
        rng.shuffle(rest)
        A = [u]
        for v in rest:
            if not any(g.has_edge(v, x) for x in A):
                A.append(v)
        out.add((tuple(sorted(A)), tuple(sorted(B))))
        out.add((tuple(sorted(B)), tuple(sorted(A))))
    return sorted(out)


def trichotomy_violation_instance(rng: CounterRNG, a: int, noise: int, p: float):
    """K(|A|, |B|) plus v with >= a non-neighbours in A and both >= 2
    neighbours and >= a non-neighbours in B, plus noise vertices."""
    na, nb = rng.randint(a, a + 2), rng.randint(a + 2, a + 4)
    A, B = list(range(na)), list(range(na, na + nb))
    v = na + nb
    edges = [(x, y) for x in A for y in B]
    non_a = rng.randint(a, na)
    edges += [(x, v) for x in rng.sample(A, na - non_a)]
    k = rng.randint(2, nb - a)
    edges += [(y, v) for y in rng.sample(B, k)]
    n = v + 1 + noise
    for u in range(v + 1, n):
        edges += [(w, u) for w in range(u) if rng.bernoulli(p)]
    g, perm = random_relabel(build_graph(n, edges), rng)
    return g, [perm[x] for x in A], [perm[y] for y in B], perm[v]


def planted_subdivision_instance(rng: CounterRNG, a: int, noise: int, p: float) -> Graph:
    """An induced subdivision of P(a, a) with random noise vertices attached."""
    pattern = gen_pattern(a, a).underlying
    edges = pattern.edges()
    chosen = rng.sample(edges, rng.randint(0, 3))
    g = gen_subdivision(pattern, {e: rng.randint(2, 3) for e in chosen})
    base = list(g.edges())
    n = g.n + noise
    for u in range(g.n, n):
        base += [(w, u) for w in range(u) if rng.bernoulli(p)]
    return random_relabel(build_graph(n, base), rng)[0]


@dataclass
class AttachmentInstance:
    g: Graph
    X: Template
    Q: list[int] = field(default_factory=list)
    meta: dict[str, Any] = field(default_factory=dict)


def _finish(n: int, edges: list[tuple[int, int]], parts: list[list[int]], Q: list[int],
            rng: CounterRNG, meta: dict) -> AttachmentInstance:
    g, perm = random_relabel(build_graph(n, edges), rng)
    X = Template.of([[perm[v] for v in p] for p in parts])
    return AttachmentInstance(g, X, sorted(perm[q] for q in Q), meta)


def _trace_edges(rng: CounterRNG, v: int, parts: list[list[int]], non: list[int],
                 keep_free: bool = False) -> list[tuple[int, int]]:
    """Edges from v to each part, leaving exactly ``non[i]`` non-neighbours in part i.
    With ``keep_free`` the first vertex of each part is always a non-neighbour."""
    out = []
    for part, k in zip(parts, non):
        if keep_free:
            pool = part[1:]
            nbrs = rng.sample(pool, len(part) - k)
        else:
            nbrs = rng.sample(part, len(part) - k)
        out += [(u, v) for u in nbrs]
    return out


def _outside_profile(rng: CounterRNG, kind: str, sizes: list[int], a: int) -> list[int]:
    """Non-neighbour counts per part for a vertex meant to land in ``kind``."""
    r = len(sizes)
    if kind == "Z":
        return [rng.randint(0, min(a, s)) for s in sizes]
    if kind == "C":
        i = rng.randrange(r)
        return [rng.randint(a + 1, s) if k == i else rng.randint(0, a - 1) for k, s in enumerate(sizes)]
    if kind == "M":
        heavy = rng.sample(range(r), rng.randint(2, r - 1))
        return [rng.randint(max(a, s - 1), s) if k in heavy else rng.randint(0, a - 1)
                for k, s in enumerate(sizes)]
    if kind == "A":
        return [rng.randint(s - 1, s) for s in sizes]
    raise ValueError(kind)


def attachment_instance(rng: CounterRNG, a: int, outside: int, p: float, *, free: int = 0) -> AttachmentInstance:
    """Template K(s_1, ..., s_r) plus ``outside`` vertices of classes Z, C, M
    and ``free`` vertices with at most one neighbour per part."""
    r = rng.randint(2, 3)
    lo = a + 2 if free else a + 1
    sizes = [rng.randint(lo, a + 4) for _ in range(r)]
    base = gen_complete_multipartite(sizes)
    parts = part_ranges(sizes)
    edges = list(base.edges())
    kinds = ["Z", "C"] + (["M"] if r >= 3 else [])
    n = base.n
    labels = []
    for _ in range(outside):
        kind = rng.choice(kinds)
        edges += _trace_edges(rng, n, parts, _outside_profile(rng, kind, sizes, a))
        edges += [(u, n) for u in range(base.n, n) if rng.bernoulli(p)]
        labels.append(kind)
        n += 1
    for _ in range(free):
        # the first vertex of every part stays outside N(A) so X - N(Q) is never empty
        edges += _trace_edges(rng, n, parts, _outside_profile(rng, "A", sizes, a), keep_free=True)
        edges += [(u, n) for u in range(base.n, n) if rng.bernoulli(p)]
        labels.append("A")
        n += 1
    return _finish(n, edges, parts, [], rng, {"sizes": sizes, "intended": labels})


def claim4_instance(rng: CounterRNG, a: int) -> AttachmentInstance:
    """A path Q whose ends see two distinct vertices of one part."""
    r = rng.randint(2, 3)
    sizes = [rng.randint(a + 2, a + 4) for _ in range(r)]
    parts = part_ranges(sizes)
    edges = list(gen_complete_multipartite(sizes).edges())
    n = sum(sizes)
    i = rng.randrange(r)
    x, y = rng.sample(parts[i], 2)
    L = rng.randint(2, 4)
    Q = list(range(n, n + L))
    edges += list(zip(Q, Q[1:])) + [(x, Q[0]), (y, Q[-1])]
    return _finish(n + L, edges, parts, Q, rng, {"sizes": sizes, "part": i})


def claim5_instance(rng: CounterRNG, a: int) -> AttachmentInstance:
    """Two non-adjacent vertices of one class M(i, j) joined through Q."""
    r = rng.randint(3, 4)
    sizes = [rng.randint(a + 2, a + 4) for _ in range(r)]
    parts = part_ranges(sizes)
    edges = list(gen_complete_multipartite(sizes).edges())
    n = sum(sizes)
    heavy = set(rng.sample(range(r), rng.randint(2, r - 1)))
    x, y = n, n + 1
    for v in (x, y):
        for k, part in enumerate(parts):
            if k not in heavy:
                edges += [(u, v) for u in part]
    L = rng.randint(1, 3)
    Q = list(range(n + 2, n + 2 + L))
    edges += list(zip(Q, Q[1:])) + [(x, Q[0]), (y, Q[-1])]
    return _finish(n + 2 + L, edges, parts, Q, rng, {"sizes": sizes, "heavy": sorted(heavy)})


def claim6_instance(rng: CounterRNG, a: int) -> AttachmentInstance:
    """Two non-adjacent vertices of C(i) sharing a+1 non-neighbours in X_i,
    joined through Q."""
    r = rng.randint(2, 3)
    sizes = [rng.randint(3 * a + 2, 3 * a + 3) for _ in range(r)]
    parts = part_ranges(sizes)
    edges = list(gen_complete_multipartite(sizes).edges())
    n = sum(sizes)
    i = rng.randrange(r)
    S = set(rng.sample(parts[i], a + 1))
    x, y = n, n + 1
    for v in (x, y):
        extra = set(rng.sample([u for u in parts[i] if u not in S], rng.randint(0, 1)))
        edges += [(u, v) for u in parts[i] if u not in S and u not in extra]
        for k, part in enumerate(parts):
            if k != i:
                edges += [(u, v) for u in part]
    L = rng.randint(1, 3)
    Q = list(range(n + 2, n + 2 + L))
    edges += list(zip(Q, Q[1:])) + [(x, Q[0]), (y, Q[-1])]
    return _finish(n + 2 + L, edges, parts, Q, rng, {"sizes": sizes, "part": i})


def ramsey_oracle(w: int, s: int) -> int:
    """Upper bound C(w+s-1, s-1) on the least N such that every graph on N
    vertices has a (w+1)-clique or an independent s-set."""
    return comb(w + s - 1, s - 1)


@dataclass
class GrowthInstance:
    g: Graph
    X: Template
    Z: list[int]
    s: int
    a: int
    meta: dict[str, Any]


def growth_instance(rng: CounterRNG, a: int, r: int) -> GrowthInstance:
    """Template of r parts of size s+a and |Z| >= R(w', s) (s+a+1)^(ra) with
    every z a-disconnected to every part and omega(G) <= w' = r + w."""
    s = rng.randint(2, 3)
    w = rng.randint(1, 2)
    m = s + a
    w_upper = r + w
    nz = ramsey_oracle(w_upper, s) * (s + a + 1) ** (r * a)
    nx = r * m
    n = nx + nz
    parts = [list(range(k * m, (k + 1) * m)) for k in range(r)]
    nbrs: list[set[int]] = [set() for _ in range(n)]
    for i in range(r):
        for j in range(i + 1, r):
            for u in parts[i]:
                for v in parts[j]:
                    nbrs[u].add(v)
                    nbrs[v].add(u)
    # a handful of traces, so classes are large and dense
    n_traces = rng.randint(1, 6) if r == 1 else rng.randint(1, 40)
    traces = []
    for _ in range(n_traces):
        t = []
        for part in parts:
            t += rng.sample(part, m - rng.randint(0, a))
        traces.append(t)
    colour = [rng.randrange(w) for _ in range(nz)]
    by_trace: list[list[int]] = [[] for _ in traces]
    for k in range(nz):
        z = nx + k
        ti = rng.randrange(n_traces)
        by_trace[ti].append(z)
        for u in traces[ti]:
            nbrs[u].add(z)
            nbrs[z].add(u)
    dense = r == 1
    for members in by_trace:
        if dense:
            for idx, z in enumerate(members):
                for u in members[idx + 1:]:
                    if colour[z - nx] != colour[u - nx]:
                        nbrs[z].add(u)
                        nbrs[u].add(z)
        elif w > 1 and len(members) > 1:
            for _ in range(3 * len(members)):
                z, u = rng.choice(members), rng.choice(members)
                if colour[z - nx] != colour[u - nx]:
                    nbrs[z].add(u)
                    nbrs[u].add(z)
    g = graph_from_lists(n, nbrs)
    meta = {"r": r, "s": s, "w": w, "omega_upper": w_upper, "Z": nz, "traces": n_traces,
            "threshold": nz}
    return GrowthInstance(g, Template.of(parts), list(range(nx, n)), s, a, meta)


# -- per-kind instance runners -------------------------------------------------

def _witness_entry(pattern, g: Graph, w: SubdivisionWitness | None) -> dict:
    if w is None:
        return {"valid": False, "witness": None}
    ok = validate_witness(pattern, g, w)
    return {"valid": bool(ok), "reason": ok.reason, "witness": witness_json(w, pattern)}


def _prob(cfg: CampaignConfig, rng: CounterRNG) -> float:
    return round(cfg.p_min + (cfg.p_max - cfg.p_min) * rng.random(), 6)


def _run_lemma1(cfg: CampaignConfig, rng: CounterRNG) -> dict:
    a = cfg.a
    n = rng.randint(cfg.n_min, cfg.n_max)
    p = _prob(cfg, rng)
    planted = rng.bernoulli(0.5)
    if planted:
        host, parts = planted_template_host(rng, n, p, a)
        protect = frozenset(v for part in parts for v in part)
    else:
        host, protect = gen_random(n, p, rng.u64()), frozenset()
    g, kept = prune_to_member(host, a, rng, protect, cfg.guards)
    configs = biclique_configs(g, rng, 2 * g.n)
    checked = meaningful = 0
    violations = []
    pattern = gen_pattern(a, a)
    for A, B in configs:
        if len(A) >= a and len(B) >= a + 2:
            meaningful += 1
        inside = set(A) | set(B)
        for v in range(g.n):
            if v in inside:
                continue
            checked += 1
            t = check_adjacency_trichotomy(g, A, B, v, a)
            if t.kind == VIOLATION:
                violations.append({"A": list(A), "B": list(B), "v": v,
                                   **_witness_entry(pattern, g, t.witness)})
    return {
        "ok": not violations,
        "host": {"n": n, "p": p, "planted": planted},
        "member": {"n": g.n, "m": g.edge_count, "kept": kept},
        "configurations": len(configs),
        "meaningful_configurations": meaningful,
        "checks": checked,
        "violations": violations,
        "witnesses": {"checked": len(violations),
                      "valid": sum(v["valid"] for v in violations)},
        "stats": {"members": 1, "configurations": len(configs),
                  "meaningful_configurations": meaningful, "checks": checked},
    }


WITNESS_SUBKINDS = ("trichotomy", "planted", "claim4", "claim5", "claim6")
CLAIM_CONSTRUCTORS: dict[str, Callable[[CounterRNG, int], AttachmentInstance]] = {
    "claim4": claim4_instance, "claim5": claim5_instance, "claim6": claim6_instance,
}


def claim_witness(inst: AttachmentInstance, a: int, claim: str):
    """Run the cutset report on a constructed claim violation and return the
    claim check plus the report."""
    part = partition_attachment(inst.g, inst.X, a)
    omega = clique_number(inst.g)[0]
    rep = component_cutset_report(inst.g, inst.X, part, inst.Q, a, _bounds(a, omega, 0, Fraction(1)))
    return rep.claims[claim], rep


def _run_witness(cfg: CampaignConfig, rng: CounterRNG, index: int) -> dict:
    a = cfg.a
    sub = WITNESS_SUBKINDS[index % len(WITNESS_SUBKINDS)]
    noise = rng.randint(cfg.n_min, cfg.n_max)
    p = _prob(cfg, rng)
    pattern = gen_pattern(a, a)
    out: dict[str, Any] = {"subkind": sub}
    if sub == "trichotomy":
        g, A, B, v = trichotomy_violation_instance(rng, a, noise, p)
        t = check_adjacency_trichotomy(g, A, B, v, a)
        entry = _witness_entry(pattern, g, t.witness)
        out.update({"n": g.n, "verdict": t.kind})
        ok = t.kind == VIOLATION and entry["valid"]
    elif sub == "planted":
        g = planted_subdivision_instance(rng, a, noise, p)
        w = detect_induced_subdivision(pattern, g, guards=cfg.guards)
        entry = _witness_entry(pattern, g, w)
        out.update({"n": g.n})
        ok = entry["valid"]
    else:
        inst = CLAIM_CONSTRUCTORS[sub](rng, a)
        check, _ = claim_witness(inst, a, sub)
        entry = _witness_entry(pattern, inst.g, check.witness)
        out.update({"n": inst.g.n, "trigger": check.trigger, "note": check.note})
        ok = entry["valid"]
    out.update({"ok": bool(ok), "witness": entry,
                "witnesses": {"checked": 1, "valid": int(entry["valid"])},
                "stats": {sub: 1}})
    return out


def _run_growth(cfg: CampaignConfig, rng: CounterRNG) -> dict:
    r = rng.randint(cfg.n_min, cfg.n_max)
    inst = growth_instance(rng, cfg.a, r)
    grown = grow_template(inst.g, inst.X, inst.Z, inst.s, inst.a)
    allowed = inst.X.vertex_set | set(inst.Z)
    problems = template_violations(inst.g, grown)
    if grown.r != inst.X.r + 1:
        problems.append(f"grown template has {grown.r} parts")
    if any(len(part) < inst.s for part in grown.parts):
        problems.append(f"a part is smaller than s={inst.s}")
    if not set(grown.vertex_set) <= allowed:
        problems.append("grown template leaves X and Z")
    return {"ok": not problems, "instance": inst.meta, "sizes": grown.sizes(),
            "problems": problems, "witnesses": {"checked": 0, "valid": 0},
            "stats": {"instances": 1, "z_vertices": len(inst.Z)}}


def _run_claim2(cfg: CampaignConfig, rng: CounterRNG) -> dict:
    a = cfg.a
    inst = attachment_instance(rng, a, rng.randint(cfg.n_min, cfg.n_max), _prob(cfg, rng))
    g = inst.g
    dom = dominating_colouring(g, inst.X, a)
    omega = clique_number(g)[0]
    tau = neighbourhood_tau(g, cfg.guards)
    budget = (1 + tau) * (a + 1) * omega
    used = dom.certificate.colours_used
    proper = dom.certificate.is_proper(g)
    ok = proper and used <= budget and dom.tau_used <= tau
    return {"ok": ok, "n": g.n, "r": inst.X.r, "omega": omega, "tau": tau, "colours": used,
            "budget": budget, "proper": proper, "tau_used": dom.tau_used,
            "witnesses": {"checked": 0, "valid": 0}, "stats": {"instances": 1}}


def reachability_separates(g: Graph, Q: list[int], cut: list[int], others: list[int]) -> bool:
    """Union-find over the edges that avoid ``cut``."""
    parent = list(range(g.n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    removed = set(cut)
    for u, v in g.edges():
        if u not in removed and v not in removed:
            parent[find(u)] = find(v)
    targets = [v for v in others if v not in removed]
    roots = {find(q) for q in Q}
    return bool(Q) and bool(targets) and not any(find(t) in roots for t in targets)


def _run_cutset(cfg: CampaignConfig, rng: CounterRNG) -> dict:
    a = cfg.a
    outside = rng.randint(0, 4)
    free = rng.randint(cfg.n_min, cfg.n_max)
    inst = attachment_instance(rng, a, outside, _prob(cfg, rng), free=free)
    g, X = inst.g, inst.X
    part = partition_attachment(g, X, a)
    omega = clique_number(g)[0]
    sheet = _bounds(a, omega, 0, Fraction(1))
    pattern = gen_pattern(a, a)
    comps = []
    ok = bool(part.A_free)
    checked = valid = 0
    for Q in g.components(mask_of(part.A_free)):
        rep = component_cutset_report(g, X, part, Q, a, sheet)
        independent = reachability_separates(g, Q, rep.neighbourhood, sorted(X.vertex_set))
        witnesses = []
        for name, c in rep.claims.items():
            if c.witness is not None:
                e = _witness_entry(pattern, g, c.witness)
                checked += 1
                valid += e["valid"]
                witnesses.append({"claim": name, **e})
        agree = rep.separates == independent
        ok = ok and agree and rep.separates and all(w["valid"] for w in witnesses)
        comps.append({"Q": rep.Q, "cutset": rep.neighbourhood, "separates": rep.separates,
                      "independent": independent,
                      "claims": {k: c.passed for k, c in rep.claims.items()},
                      "witnesses": witnesses})
    return {"ok": ok, "n": g.n, "A": part.A_free, "components": comps,
            "witnesses": {"checked": checked, "valid": valid},
            "stats": {"instances": 1, "components": len(comps)}}


def _run_detector(cfg: CampaignConfig, rng: CounterRNG) -> dict:
    a = cfg.a
    n = rng.randint(cfg.n_min, cfg.n_max)
    p = _prob(cfg, rng)
    g = gen_random(n, p, rng.u64())
    results = {}
    ok = True
    checked = valid = 0
    for b in (1, a):
        pattern = gen_pattern(a, b)
        w = detect_induced_subdivision(pattern, g, guards=cfg.guards)
        naive = naive_induced_subdivision(pattern.underlying, g)
        agree = (w is None) == (naive is None)
        entry: dict[str, Any] = {"detector": w is not None, "naive": naive is not None, "agree": agree}
        if w is not None:
            e = _witness_entry(pattern, g, w)
            entry["witness_valid"] = e["valid"]
            checked += 1
            valid += e["valid"]
            ok = ok and e["valid"]
        ok = ok and agree
        results[f"P({a},{b})"] = entry
    return {"ok": ok, "n": n, "p": p, "edges": [list(e) for e in g.edges()], "results": results,
            "witnesses": {"checked": checked, "valid": valid}, "stats": {"graphs": 1}}


@lru_cache(maxsize=None)
def _bounds(a: int, omega: int, tau: int, c: Fraction):
    return compute_bounds(a, omega, tau, c_const=c)


def _run_chi(cfg: CampaignConfig, rng: CounterRNG) -> dict:
    a = cfg.a
    n = rng.randint(cfg.n_min, cfg.n_max)
    p = _prob(cfg, rng)
    g = gen_random(n, p, rng.u64())
    member = detect_induced_subdivision(gen_pattern(a, a), g, guards=cfg.guards) is None
    out: dict[str, Any] = {"n": n, "p": p, "member": member, "witnesses": {"checked": 0, "valid": 0}}
    if not member:
        out.update({"ok": True, "stats": {"graphs": 1, "members": 0}})
        return out
    omega = clique_number(g)[0]
    chi = chromatic_number(g, guards=cfg.guards).colours_used
    tau = neighbourhood_tau(g, cfg.guards)
    sheet = _bounds(a, omega, tau, Fraction(1))
    out.update({
        "ok": chi <= sheet.final_bound,
        "omega": omega, "chi": chi, "tau": tau,
        "within_final_bound": chi <= sheet.final_bound,
        "within_bound_given_tau": chi <= sheet.chi_bound_given_tau,
        "stats": {"graphs": 1, "members": 1},
    })
    return out


def run_instance(cfg: CampaignConfig, index: int) -> dict:
    rng = cfg.rng(index)
    if cfg.kind == "lemma1":
        body = _run_lemma1(cfg, rng)
    elif cfg.kind == "witness":
        body = _run_witness(cfg, rng, index)
    elif cfg.kind == "growth":
        body = _run_growth(cfg, rng)
    elif cfg.kind == "claim2":
        body = _run_claim2(cfg, rng)
    elif cfg.kind == "cutset":
        body = _run_cutset(cfg, rng)
    elif cfg.kind == "detector":
        body = _run_detector(cfg, rng)
    else:
        body = _run_chi(cfg, rng)
    return {"kind": cfg.kind, "seed": cfg.seed, "index": index, **body}


def _chunk(args: tuple[dict, list[int]]) -> list[dict]:
    cfg = CampaignConfig.from_dict(args[0])
    return [run_instance(cfg, i) for i in args[1]]


def summarise(cfg: CampaignConfig, results: list[dict]) -> dict:
    results = sorted(results, key=lambda r: r["index"])
    stats: dict[str, int] = {}
    for r in results:
        for k, v in r.get("stats", {}).items():
            stats[k] = stats.get(k, 0) + v
    failures = [r for r in results if not r["ok"]]
    summary = {
        "schema_version": SCHEMA_VERSION,
        "config": cfg.to_dict(),
        "instances": len(results),
        "passes": len(results) - len(failures),
        "failures": failures,
        "witnesses": {
            "checked": sum(r["witnesses"]["checked"] for r in results),
            "valid": sum(r["witnesses"]["valid"] for r in results),
        },
        "stats": dict(sorted(stats.items())),
    }
    if cfg.kind == "chi":
        by_omega: dict[str, int] = {}
        for r in results:
            if r["member"]:
                key = str(r["omega"])
                by_omega[key] = max(by_omega.get(key, 0), r["chi"])
        summary["max_chi_by_omega"] = dict(sorted(by_omega.items(), key=lambda kv: int(kv[0])))
    return summary


def run_campaign(cfg: CampaignConfig, *, workers: int = 1) -> dict:
    indices = list(range(cfg.count))
    if workers <= 1:
        results = [run_instance(cfg, i) for i in indices]
    else:
        chunks = [indices[k::workers] for k in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = [r for part in pool.map(_chunk, [(cfg.to_dict(), c) for c in chunks]) for r in part]
    return summarise(cfg, results)
