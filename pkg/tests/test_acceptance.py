"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (or ``python tests/test_acceptance.py``).
"""

import sys
from itertools import product

import pytest

from pabfree.campaigns import CampaignConfig, run_campaign
from pabfree.formats import emit_dimacs, emit_graph6, parse_dimacs, parse_graph6
from pabfree.graph import gen_pattern, gen_random
from pabfree.oracles import NEITHER, is_k_connected, naive_induced_subdivision, ramsey_extract
from pabfree.rng import CounterRNG
from pabfree.structure import compute_bounds
from pabfree.subdivision import detect_induced_subdivision, validate_witness

from _support import atlas, brute_k_connected, catalog

pytestmark = pytest.mark.slow


@pytest.fixture
def report(capsys):
    def emit(number: int, ok: bool, text: str) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {number:>2} {'PASS' if ok else 'FAIL'}: {text}")
    return emit


def test_01_detector_matches_naive_oracle(report):
    summary = run_campaign(CampaignConfig("detector", seed=1, count=10_000, n_min=5, n_max=9))
    random_ok = summary["passes"] == summary["instances"]
    mismatches = 0
    catalog_graphs = atlas(7)
    for g in catalog_graphs:
        for b in (1, 2):
            p = gen_pattern(2, b)
            w = detect_induced_subdivision(p, g)
            naive = naive_induced_subdivision(p.underlying, g)
            if (w is None) != (naive is None) or (w is not None and not validate_witness(p, g, w)):
                mismatches += 1
    ok = random_ok and mismatches == 0
    report(1, ok, f"{summary['passes']}/{summary['instances']} random graphs (n 5..9) and "
                  f"{len(catalog_graphs)} catalog graphs (n <= 7) agree for P(2,1), P(2,2); "
                  f"{mismatches} catalog mismatches")
    assert ok


def test_02_every_witness_validates(report):
    totals = {"checked": 0, "valid": 0}
    parts = []
    for kind, count in [("witness", 1500), ("detector", 2000), ("cutset", 300), ("lemma1", 200)]:
        s = run_campaign(CampaignConfig(kind, seed=2, count=count))
        for k in totals:
            totals[k] += s["witnesses"][k]
        parts.append(f"{kind}={s['witnesses']['checked']}")
    ok = totals["checked"] >= 1500 and totals["valid"] == totals["checked"]
    report(2, ok, f"{totals['valid']}/{totals['checked']} witnesses valid ({', '.join(parts)})")
    assert ok


def test_03_trichotomy_never_violated_in_class(report):
    s = run_campaign(CampaignConfig("lemma1", seed=3, count=1000, n_min=8, n_max=16))
    violations = sum(len(f.get("violations", [])) for f in s["failures"])
    ok = s["instances"] >= 1000 and not s["failures"] and s["stats"]["members"] == 1000
    report(3, ok, f"{s['stats']['members']} members, {s['stats']['configurations']} "
                  f"(A, B) configurations ({s['stats']['meaningful_configurations']} with |A| >= a, "
                  f"|B| >= a+2), {s['stats']['checks']} vertex checks, "
                  f"{violations} violations")
    assert ok


def test_04_template_growth(report):
    s = run_campaign(CampaignConfig("growth", seed=4, count=200))
    ok = s["passes"] == s["instances"] == 200
    report(4, ok, f"{s['passes']}/{s['instances']} growth instances verified by enumeration "
                  f"({s['stats']['z_vertices']} Z vertices in total)")
    assert ok


def test_05_dominating_colouring(report):
    s = run_campaign(CampaignConfig("claim2", seed=5, count=100))
    ok = s["passes"] == s["instances"] == 100
    report(5, ok, f"{s['passes']}/{s['instances']} proper colourings within (1+tau)(a+1)omega")
    assert ok


def test_06_cutset_verdicts(report):
    s = run_campaign(CampaignConfig("cutset", seed=6, count=100))
    ok = s["passes"] == s["instances"] == 100
    report(6, ok, f"{s['passes']}/{s['instances']} instances, {s['stats']['components']} "
                  f"components of A, every N(Q) separates by independent reachability")
    assert ok


def test_07_ramsey_floor(report):
    graphs = catalog(6)
    bad = [g for g in graphs for p in range(4) if ramsey_extract(g, p, 3 - p).kind == NEITHER]
    ok = len(graphs) == 156 and not bad
    report(7, ok, f"{len(graphs)} six-vertex classes, {len(bad)} without triangle or independent triple")
    assert ok


def test_08_connectivity_oracle(report):
    total = disagree = 0
    for n in range(1, 9):
        for g in catalog(n):
            for k in range(1, 6):
                total += 1
                disagree += is_k_connected(g, k) != brute_k_connected(g, k)
    ok = disagree == 0
    report(8, ok, f"{total} (graph, k) pairs over all graphs n <= 8, {disagree} disagreements")
    assert ok


def test_09_bound_arithmetic(report):
    sheet = compute_bounds(2, 3, 1)
    exact = sheet.f == 10 and sheet.term_dominating == 18
    fields = ("f", "s", "d_value", "term_dominating", "term_cutset", "b", "chi_bound_given_tau",
              "final_bound")
    grid = {(a, w, t): compute_bounds(a, w, t)
            for a, w, t in product((2, 3), range(1, 7), range(0, 7))}
    breaks = 0
    for (a, w, t), s in grid.items():
        for nxt in ((a, w + 1, t), (a, w, t + 1)):
            if nxt in grid:
                breaks += sum(getattr(grid[nxt], f) < getattr(s, f) for f in fields)
    ok = exact and breaks == 0
    report(9, ok, f"f={sheet.f}, middle term={sheet.term_dominating}; "
                  f"{len(grid)} grid points, {breaks} monotonicity breaks")
    assert ok


def test_10_format_fidelity(report):
    rng = CounterRNG.from_seed(10)
    bad = 0
    for i in range(1000):
        n = rng.randint(0, 80)
        g = gen_random(n, rng.random(), rng.u64())
        g6 = emit_graph6(g)
        dim = emit_dimacs(g)
        if parse_graph6(g6) != g or emit_graph6(parse_graph6(g6)) != g6:
            bad += 1
        elif parse_dimacs(dim) != g or emit_dimacs(parse_dimacs(dim)) != dim:
            bad += 1
    ok = bad == 0
    report(10, ok, f"1000 graphs (n 0..80), {bad} round-trip failures in graph6 or DIMACS")
    assert ok


def test_11_chi_boundedness_sanity(report):
    s = run_campaign(CampaignConfig("chi", seed=11, count=10_000, n_min=1, n_max=10))
    ok = not s["failures"] and s["instances"] == 10_000
    table = ", ".join(f"omega {w}: {c}" for w, c in s["max_chi_by_omega"].items())
    report(11, ok, f"{s['stats']['members']} members of {s['instances']} random graphs within "
                   f"the final bound; max chi by omega: {table}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
