import json

import pytest

from pabfree.campaigns import (KINDS, CampaignConfig, CampaignConfigError, growth_instance,
                               prune_to_member, ramsey_oracle, reachability_separates,
                               run_campaign, run_instance)
from pabfree.graph import gen_complete_multipartite, gen_random
from pabfree.oracles import clique_number, max_independent_set
from pabfree.rng import CounterRNG
from pabfree.serialize import dumps
from pabfree.structure import is_template
from pabfree.subdivision import is_member

from _support import catalog


@pytest.mark.parametrize("kwargs", [
    {"kind": "nope"},
    {"kind": "chi", "count": 0},
    {"kind": "chi", "n_min": 5, "n_max": 4},
    {"kind": "chi", "p_min": 0.6, "p_max": 0.5},
    {"kind": "chi", "p_max": 1.5},
    {"kind": "chi", "a": 1},
    {"kind": "growth", "n_max": 3},
    {"kind": "chi", "guard_overrides": {"no_such_guard": 3}},
])
def test_config_validation(kwargs):
    with pytest.raises((CampaignConfigError, ValueError)):
        CampaignConfig(**kwargs)


def test_config_round_trip_and_unknown_fields():
    cfg = CampaignConfig("cutset", seed=4, count=7)
    assert CampaignConfig.from_dict(json.loads(json.dumps(cfg.to_dict()))) == cfg
    with pytest.raises(CampaignConfigError, match="bogus"):
        CampaignConfig.from_dict({"kind": "chi", "bogus": 1})


@pytest.mark.parametrize("kind", KINDS)
def test_small_campaign_passes_and_replays(kind):
    cfg = CampaignConfig(kind, seed=3, count=6)
    summary = run_campaign(cfg)
    assert summary["instances"] == 6
    assert summary["failures"] == [], summary["failures"]
    assert summary["witnesses"]["valid"] == summary["witnesses"]["checked"]
    again = run_campaign(cfg)
    assert dumps(again) == dumps(summary)
    assert dumps(run_instance(cfg, 4)) == dumps(run_instance(cfg, 4))


def test_instances_are_independent_of_campaign_size():
    small = run_campaign(CampaignConfig("detector", seed=1, count=3))
    large = run_campaign(CampaignConfig("detector", seed=1, count=5))
    assert small["stats"]["graphs"] <= large["stats"]["graphs"]
    assert dumps(run_instance(CampaignConfig("detector", seed=1, count=3), 2)) == \
        dumps(run_instance(CampaignConfig("detector", seed=1, count=5), 2))


def test_seeds_change_instances():
    a = run_instance(CampaignConfig("chi", seed=1), 0)
    b = run_instance(CampaignConfig("chi", seed=2), 0)
    assert dumps(a) != dumps(b)


def test_parallel_run_matches_serial():
    cfg = CampaignConfig("witness", seed=2, count=6)
    assert dumps(run_campaign(cfg, workers=2)) == dumps(run_campaign(cfg))


def test_prune_to_member_keeps_result_in_class():
    rng = CounterRNG(11)
    for seed in range(5):
        g = gen_random(12, 0.5, seed)
        h, _ = prune_to_member(g, 2, rng)
        assert is_member(h, 2)


def test_ramsey_oracle_is_an_upper_bound_on_small_graphs():
    # every graph on C(w+s-1, s-1) vertices has a (w+1)-clique or an independent s-set
    for w, s in [(1, 2), (2, 2), (1, 3), (2, 3)]:
        n = ramsey_oracle(w, s)
        if n > 7:
            continue
        for g in catalog(n):
            assert clique_number(g)[0] >= w + 1 or len(max_independent_set(g)) >= s


def test_growth_instances_meet_threshold():
    rng = CounterRNG(5)
    for r in (1, 2):
        inst = growth_instance(rng, 2, r)
        assert is_template(inst.g, inst.X)
        m = inst.meta
        assert m["r"] == r == inst.X.r and inst.X.sizes() == [inst.s + 2] * r
        assert len(inst.Z) >= ramsey_oracle(m["omega_upper"], inst.s) * (inst.s + 3) ** (2 * r)
        for z in inst.Z[:50]:
            assert all(sum(1 for u in p if not inst.g.has_edge(z, u)) <= 2 for p in inst.X.parts)


def test_reachability_helper():
    g = gen_complete_multipartite([2, 2])
    assert reachability_separates(g, [0], [2, 3], [1])
    assert not reachability_separates(g, [0], [2], [1])


def test_chi_campaign_reports_max_chi_by_omega():
    summary = run_campaign(CampaignConfig("chi", seed=0, count=20))
    table = summary["max_chi_by_omega"]
    assert all(int(w) <= chi for w, chi in table.items())
