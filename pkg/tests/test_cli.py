import json

import pytest

from pabfree.cli import main
from pabfree.formats import emit_dimacs, emit_graph6, parse_graph6
from pabfree.graph import add_edges, complete_graph, gen_complete_multipartite, gen_pattern
from pabfree.oracles import is_isomorphic
from pabfree.subdivision import SubdivisionWitness, validate_witness


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def write(tmp_path, name, g, fmt="graph6"):
    path = tmp_path / name
    path.write_text(emit_graph6(g) + "\n" if fmt == "graph6" else emit_dimacs(g))
    return path


def witness_from_json(data):
    branch = {e["pattern_vertex"]: e["host_vertex"] for e in data["branch"]}
    paths = {tuple(p["edge"]): tuple(p["vertices"]) for p in data["paths"]}
    return SubdivisionWitness(branch, paths)


def test_detect_member(tmp_path, capsys):
    path = write(tmp_path, "k5.g6", complete_graph(5))
    code, out, _ = run(capsys, "detect", "--input", path, "--a", 2)
    assert code == 0
    data = json.loads(out)
    assert data["member"] is True and "witness" not in data
    assert data["schema_version"]


def test_detect_non_member_ships_checkable_witness(tmp_path, capsys):
    p = gen_pattern(2, 2)
    path = write(tmp_path, "p22.g6", p.underlying)
    code, out, _ = run(capsys, "detect", "--input", path)
    assert code == 1
    data = json.loads(out)
    assert data["member"] is False
    assert validate_witness(p, p.underlying, witness_from_json(data["witness"]))


def test_detect_malformed_input(tmp_path, capsys):
    path = tmp_path / "bad.g6"
    path.write_text("D?")
    code, out, err = run(capsys, "detect", "--input", path)
    assert code == 2 and out == ""
    assert "bad.g6" in err and "byte" in err


def test_detect_dimacs_with_format_flag(tmp_path, capsys):
    path = write(tmp_path, "k4.txt", complete_graph(4), fmt="dimacs")
    code, out, _ = run(capsys, "detect", "--input", path, "--format", "dimacs")
    assert code == 0 and json.loads(out)["member"]
    code, _, err = run(capsys, "detect", "--input", path)
    assert code == 2 and "k4.txt" in err


def test_guard_override(tmp_path, capsys):
    path = write(tmp_path, "k30.g6", complete_graph(30))
    code, _, err = run(capsys, "detect", "--input", path, "--guard-override", "max_host_pab=20")
    assert code == 2 and "max_host_pab" in err
    code, _, err = run(capsys, "detect", "--input", path, "--guard-override", "max_host_pab")
    assert code == 2


@pytest.mark.parametrize("graph,branch", [
    (complete_graph(5), "degenerate"),
    (gen_complete_multipartite([10, 10]), "dominating"),
    (add_edges(gen_complete_multipartite([10, 10]), 22, [(20, 0), (21, 10), (20, 21)]), "cutset"),
])
def test_decompose_examples(tmp_path, capsys, graph, branch):
    path = write(tmp_path, "g.g6", graph)
    code, out, _ = run(capsys, "decompose", "--input", path, "--a", 2)
    assert code == 0
    data = json.loads(out)
    assert data["branch"] == branch
    if branch == "cutset":
        assert data["checks"]["all_claims_pass"] and data["checks"]["all_cutsets_separate"]
        return
    colour = {int(v): c for v, c in data["colouring"]["colour"].items()}
    assert all(colour[u] != colour[v] for u, v in graph.edges() if u in colour and v in colour)


def test_decompose_non_member_and_tau_mode(tmp_path, capsys):
    path = write(tmp_path, "p22.g6", gen_pattern(2, 2).underlying)
    code, out, _ = run(capsys, "decompose", "--input", path)
    assert code == 1 and json.loads(out)["error"]["stage"] == "membership"
    path = write(tmp_path, "k5.g6", complete_graph(5))
    code, out, _ = run(capsys, "decompose", "--input", path, "--tau-mode", "fixed:3")
    assert code == 0 and json.loads(out)["tau"] == {"mode": "fixed:3", "value": 3}
    code, _, err = run(capsys, "decompose", "--input", path, "--tau-mode", "sometimes")
    assert code == 2 and "tau" in err


def test_bounds_command(capsys):
    code, out, _ = run(capsys, "bounds", "--a", 2, "--omega", 3, "--tau", 1)
    assert code == 0
    sheet = json.loads(out)["bounds"]
    assert sheet["f"] == 10 and sheet["s"] == 13 and sheet["term_dominating"] == 18
    code, _, err = run(capsys, "bounds", "--a", 1, "--omega", 3)
    assert code == 2 and "a must be" in err


def test_verify_campaign_and_replay(tmp_path, capsys):
    code, out, _ = run(capsys, "verify", "--kind", "lemma1", "--seed", 5, "--count", 5)
    assert code == 0
    summary = json.loads(out)
    assert summary["instances"] == summary["passes"] == 5
    code, first, _ = run(capsys, "verify", "--kind", "lemma1", "--seed", 5, "--replay", 3)
    code2, second, _ = run(capsys, "verify", "--kind", "lemma1", "--seed", 5, "--replay", 3)
    assert code == code2 == 0 and first == second
    assert json.loads(first)["index"] == 3


def test_verify_witness_campaign_all_valid(capsys):
    code, out, _ = run(capsys, "verify", "--kind", "witness", "--count", 10)
    summary = json.loads(out)
    assert code == 0
    assert summary["witnesses"]["checked"] == summary["witnesses"]["valid"] > 0


def test_verify_config_file(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"kind": "chi", "count": 3, "seed": 9}))
    code, out, _ = run(capsys, "verify", "--config", cfg, "--json-out", tmp_path / "out.json")
    assert code == 0 and out == ""
    assert json.loads((tmp_path / "out.json").read_text())["config"]["seed"] == 9
    cfg.write_text(json.dumps({"kind": "chi", "count": 0}))
    assert run(capsys, "verify", "--config", cfg)[0] == 2
    assert run(capsys, "verify", "--count", 3)[0] == 2


def test_gen_pattern_round_trips(tmp_path, capsys):
    code, out, _ = run(capsys, "gen", "pattern", 2, 1)
    assert code == 0
    assert is_isomorphic(parse_graph6(out), gen_pattern(2, 1).underlying)
    out_path = tmp_path / "k33.col"
    code, _, _ = run(capsys, "gen", "multipartite", 3, 3, "--format", "dimacs", "--output", out_path)
    assert code == 0
    assert out_path.read_text().splitlines()[0] == "p edge 6 9"
    code, _, err = run(capsys, "gen", "hypercube", 3)
    assert code == 2 and "unknown generator" in err
    assert run(capsys, "gen", "complete")[0] == 2


def test_convert(tmp_path, capsys):
    src = write(tmp_path, "p.g6", gen_pattern(2, 2).underlying)
    code, out, _ = run(capsys, "convert", "--input", src, "--to", "dimacs")
    assert code == 0 and out.startswith("p edge 7 10")
    dst = tmp_path / "p.col"
    dst.write_text(out)
    code, back, _ = run(capsys, "convert", "--input", dst, "--to", "graph6")
    assert back.strip() == src.read_text().strip()


def test_commands_are_byte_identical_across_runs(tmp_path, capsys):
    path = write(tmp_path, "g.g6", add_edges(gen_complete_multipartite([10, 10]), 22,
                                             [(20, 0), (21, 10), (20, 21)]))
    outs = [run(capsys, "decompose", "--input", path)[1] for _ in range(2)]
    assert outs[0] == outs[1]
    outs = [run(capsys, "gen", "random", 12, 0.4, "--seed", 7)[1] for _ in range(2)]
    assert outs[0] == outs[1]


def test_help_and_bad_usage(capsys):
    assert run(capsys, "--help")[0] == 0
    assert run(capsys)[0] == 2
    assert run(capsys, "detect")[0] == 2
