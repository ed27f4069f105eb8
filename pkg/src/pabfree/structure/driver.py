"""End-to-end decomposition of a member of the class: high-connectivity core,
K(s, s) or degeneracy, induced biclique, maximal template, attachment
partition, and then either the dominating colouring or cutset reports."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .._bits import mask_of
from ..graph import Graph, gen_pattern
from ..guards import Guards, resolve
from ..oracles import (chromatic_number, clique_number, find_k_connected_chromatic,
                       vertex_connectivity)
from ..serialize import SCHEMA_VERSION, certificate_json, int_summary, witness_json
from ..subdivision import detect_induced_subdivision, validate_witness
from .bounds import BoundSheet, compute_bounds, z_threshold
from .colouring import degeneracy_colouring, degeneracy_order, dominating_colouring
from .cutset import component_cutset_report
from .lemmas import InvalidAttachment, partition_attachment
from .template import (BicliqueNotFound, TemplateError, extract_induced_biclique, find_kss,
                       max_template, z_set)

DEGENERATE = "degenerate"
DOMINATING = "dominating"
CUTSET = "cutset"


class DriverError(RuntimeError):
    """A pipeline step failed; ``stage`` names it and ``detail`` carries
    JSON-ready diagnostics."""

    def __init__(self, stage: str, message: str, detail: dict | None = None):
        super().__init__(f"{stage}: {message}")
        self.stage = stage
        self.detail = detail or {}


@dataclass(frozen=True)
class DriverConfig:
    c_const: Fraction = Fraction(1)
    tau_mode: str = "oracle"  # "oracle" or "fixed:N"
    guards: Guards | None = None


def neighbourhood_tau(g: Graph, guards: Guards | None = None) -> int:
    """max over v of chi(G[N(v)]): every such subgraph has clique number
    below omega(G), so this is the smallest tau the inductive hypothesis
    can be asked to supply on g."""
    best = 0
    for v in range(g.n):
        nb = g.neighbours(v)
        if nb:
            best = max(best, chromatic_number(g.induced(nb), guards=guards).colours_used)
    return best


def parse_tau_mode(mode: str) -> int | None:
    if mode == "oracle":
        return None
    if mode.startswith("fixed:"):
        try:
            value = int(mode[len("fixed:"):])
        except ValueError:
            value = -1
        if value >= 0:
            return value
    raise ValueError(f"tau mode must be 'oracle' or 'fixed:N' with N >= 0, got {mode!r}")


def _bounds_json(sheet: BoundSheet) -> dict:
    return {
        "f": sheet.f, "s": sheet.s,
        "b": int_summary(sheet.b),
        "term_degenerate": int_summary(sheet.term_degenerate),
        "term_dominating": sheet.term_dominating,
        "term_cutset": int_summary(sheet.term_cutset),
        "z_bound": int_summary(sheet.z_bound),
        "claim3_bound": int_summary(sheet.claim3_bound),
        "claim5_bound": sheet.claim5_bound,
        "claim6_bound": int_summary(sheet.claim6_bound),
        "chi_bound_given_tau": int_summary(sheet.chi_bound_given_tau),
        "final_bound": int_summary(sheet.final_bound),
    }


def _kss_stage(core: Graph, sheet: BoundSheet, guards: Guards, log: list[str]):
    """Largest s in [f, min(n/2, s_formula)] for which K(s, s) is present and
    yields an induced K(f, f); None if no s works."""
    f = sheet.f
    top = min(core.n // 2, sheet.s)
    for s in range(top, f - 1, -1):
        found = find_kss(core, s, guards=guards)
        if found is None:
            log.append(f"no K({s},{s})")
            continue
        U, W = found
        try:
            X = extract_induced_biclique(core, U, W, f)
        except BicliqueNotFound as exc:
            log.append(f"K({s},{s}) found but no induced K({f},{f}): {exc}")
            continue
        log.append(f"K({s},{s}) found; induced K({f},{f}) extracted")
        return s, U, W, X
    if top < f:
        log.append(f"core has {core.n} vertices, too few for K({f},{f})")
    return None


def decompose_driver(g: Graph, a: int, config: DriverConfig | None = None) -> dict:
    cfg = config or DriverConfig()
    guards = resolve(cfg.guards)
    g = Graph(g.n, g.adj)
    guards.check("max_colour_vertices", g.n)

    witness = detect_induced_subdivision(gen_pattern(a, a), g, guards=guards)
    if witness is not None:
        raise DriverError("membership", f"input contains an induced subdivision of P({a},{a})",
                          {"witness": witness_json(witness, gen_pattern(a, a))})

    omega, clique = clique_number(g)
    chi_cert = chromatic_number(g, guards=guards)
    chi = chi_cert.colours_used
    fixed = parse_tau_mode(cfg.tau_mode)
    tau = neighbourhood_tau(g, guards) if fixed is None else fixed
    report: dict = {
        "schema_version": SCHEMA_VERSION,
        "a": a,
        "input": {"n": g.n, "m": g.edge_count},
        "member": True,
        "omega": omega,
        "clique": clique,
        "chi": chi,
        "tau": {"mode": cfg.tau_mode, "value": tau},
        "c_const": str(cfg.c_const),
        "checks": {},
    }
    if omega <= 1:
        # no edges, hence no 1-connected subgraph to serve as the core
        report["branch"] = DEGENERATE
        report["stages"] = ["empty graph" if omega == 0 else "edgeless graph"]
        report["colouring"] = certificate_json(chi_cert)
        return report

    sheet = compute_bounds(a, omega, tau, c_const=cfg.c_const)
    report["bounds"] = _bounds_json(sheet)
    checks = report["checks"]
    checks["chi_within_final_bound"] = chi <= sheet.final_bound
    checks["chi_within_bound_given_tau"] = chi <= sheet.chi_bound_given_tau
    checks["chi_reaches_threshold"] = chi >= sheet.chi_threshold
    stages: list[str] = []
    report["stages"] = stages

    # high-connectivity core: largest k <= chi with a k-connected subgraph of chi >= k
    core_search = None
    for k in range(chi, 0, -1):
        core_search = find_k_connected_chromatic(g, k, guards=guards)
        if core_search.found is not None:
            break
    assert core_search is not None and core_search.found is not None
    core = core_search.found
    to_root = core.to_root
    report["core"] = {
        "k": core_search.k,
        "vertices": core_search.vertices,
        "chromatic": core_search.chromatic,
        "connectivity": core_search.connectivity,
        "trail": core_search.trail,
    }
    stages.append(f"core: {core.n} vertices, {core_search.k}-connected, "
                  f"chromatic number {core_search.chromatic}")

    def roots(vs) -> list[int]:
        return sorted(to_root(v) for v in vs)

    kss_log: list[str] = []
    kss = _kss_stage(core, sheet, guards, kss_log)
    report["kss"] = {"log": kss_log}
    if kss is None:
        order, degen = degeneracy_order(core)
        d = degen + 1
        cert = degeneracy_colouring(core, d)
        report["branch"] = DEGENERATE
        report["degeneracy"] = {
            "degeneracy": degen, "d_oracle": d,
            "d_formula": int_summary(sheet.d_value),
            "d_oracle_within_formula": d <= sheet.d_value,
            "order": [to_root(v) for v in order],
        }
        report["colouring"] = certificate_json(cert, to_root)
        checks["colouring_proper"] = cert.is_proper(core)
        checks["colouring_within_d"] = cert.colours_used <= d
        stages.append(f"no usable K(s,s): core is {degen}-degenerate, {cert.colours_used} colours")
        return report

    s, U, W, X0 = kss
    report["kss"].update({"s": s, "U": roots(U), "W": roots(W),
                          "biclique": [roots(p) for p in X0.parts]})
    try:
        search = max_template(core, sheet.f, a, omega, X0, guards=guards)
    except TemplateError as exc:
        raise DriverError("template", str(exc)) from exc
    X = search.template
    if X.r > omega:
        raise DriverError("template", f"template has r={X.r} > omega={omega}")
    Z = z_set(core, X, a)
    zt = z_threshold(omega, sheet.f, a, X.r, cfg.c_const)
    report["template"] = {
        "r": X.r, "parts": [roots(p) for p in X.parts], "steps": search.steps,
        "exhaustive": search.exhaustive,
    }
    report["z"] = {"size": len(Z), "threshold": int_summary(zt), "below_threshold": len(Z) < zt}
    checks["r_at_most_omega"] = X.r <= omega
    stages.append(f"template with r={X.r}, parts of size {X.sizes()}")

    try:
        partition = partition_attachment(core, X, a)
    except InvalidAttachment as exc:
        w = exc.classification.witness
        raise DriverError("partition", str(exc), {
            "vertex": to_root(exc.vertex),
            "witness": witness_json(w, gen_pattern(a, a), to_root) if w else None,
        }) from exc
    report["partition"] = {
        "Z": roots(partition.Z),
        "C": {str(i): roots(vs) for i, vs in partition.C.items()},
        "A": roots(partition.A_free),
        "M": {f"{i},{j}": roots(vs) for (i, j), vs in partition.M.items()},
    }
    checks["m_classes_at_most_2r_minus_2"] = len(partition.M) <= 2 * X.r - 2

    if not partition.A_free:
        dom = dominating_colouring(core, X, a)
        budget = (1 + tau) * (a + 1) * X.r
        report["branch"] = DOMINATING
        report["colouring"] = certificate_json(dom.certificate, to_root)
        report["dominating"] = {
            "S": roots(dom.S),
            "dominator": {str(to_root(v)): to_root(s) for v, s in sorted(dom.dominator.items())},
            "tau_used": dom.tau_used,
            "budget": budget,
        }
        checks["colouring_proper"] = dom.certificate.is_proper(core)
        checks["colouring_within_budget"] = dom.certificate.colours_used <= budget
        checks["tau_used_within_tau"] = dom.tau_used <= tau
        stages.append(f"A empty: dominating colouring with {dom.certificate.colours_used} colours")
        return report

    kappa = vertex_connectivity(core)
    pattern = gen_pattern(a, a)
    reports = []
    for Q in core.components(mask_of(partition.A_free)):
        rep = component_cutset_report(core, X, partition, Q, a, sheet)
        claims = {}
        for name, c in rep.claims.items():
            entry = {
                "counts": c.counts, "bound": int_summary(c.bound), "bound_ok": c.bound_ok,
                "trigger": c.trigger, "passed": c.passed, "note": c.note,
                "witness": witness_json(c.witness, pattern, to_root) if c.witness else None,
                "witness_valid": c.witness_valid,
            }
            if c.witness is not None:
                # double-check in the core's own ids
                entry["witness_valid"] = bool(validate_witness(pattern, core, c.witness))
            claims[name] = entry
        reports.append({
            "Q": roots(rep.Q),
            "neighbourhood": roots(rep.neighbourhood),
            "counts": {"Z": rep.in_Z, "X": rep.in_X,
                       "C": {str(i): c for i, c in rep.in_C.items()},
                       "M": {f"{i},{j}": c for (i, j), c in rep.in_M.items()}},
            "claims": claims,
            "separates": rep.separates,
            "cutset_size": len(rep.neighbourhood),
            "cutset_at_least_kappa": len(rep.neighbourhood) >= kappa,
            "cutset_below_b": rep.cutset_below_b,
        })
    report["branch"] = CUTSET
    report["kappa"] = kappa
    report["cutsets"] = reports
    checks["all_cutsets_separate"] = all(r["separates"] for r in reports)
    checks["all_claims_pass"] = all(c["passed"] for r in reports for c in r["claims"].values())
    stages.append(f"A non-empty: {len(reports)} component(s) analysed")
    return report
