from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pabfree.graph import (build_graph, complete_graph, cycle_graph, gen_complete_multipartite,
                           gen_random, path_graph, petersen_graph)
from pabfree.guards import DEFAULT_GUARDS, GuardError
from pabfree.oracles import (CLIQUE, INDEPENDENT_SET, NEITHER, chromatic_number, clique_number,
                             dsatur_colouring, find_k_connected_chromatic, induced_embedding,
                             is_k_connected, max_independent_set, minimum_vertex_cut,
                             ramsey_extract, vertex_connectivity)

from _support import (atlas, brute_chromatic_number, brute_clique_number, brute_connectivity,
                      brute_k_connected, catalog)


@st.composite
def small_graphs(draw, max_n=10):
    n = draw(st.integers(0, max_n))
    return gen_random(n, draw(st.floats(0, 1)), draw(st.integers(0, 2 ** 32)))


@pytest.mark.parametrize("g,expected", [
    (complete_graph(5), 5),
    (cycle_graph(5), 2),
    (gen_complete_multipartite([3, 3, 3]), 3),
    (build_graph(0, []), 0),
])
def test_clique_number_examples(g, expected):
    size, witness = clique_number(g)
    assert size == expected == len(witness)
    assert g.is_clique(witness)
    assert brute_clique_number(g) == expected


@pytest.mark.parametrize("g,expected", [
    (complete_graph(4), 4), (cycle_graph(5), 3), (petersen_graph(), 3)])
def test_chromatic_number_examples(g, expected):
    cert = chromatic_number(g)
    assert cert.is_proper(g) and cert.colours_used == expected


def test_petersen_is_not_bipartite_by_odd_cycle():
    # the outer 5-cycle alone already needs three colours
    g = petersen_graph()
    assert chromatic_number(g.induced(range(5))).colours_used == 3


def test_chromatic_guard_names_parameter():
    with pytest.raises(GuardError, match="max_colour_vertices"):
        chromatic_number(complete_graph(41))
    relaxed = DEFAULT_GUARDS.override(max_colour_vertices=45)
    assert chromatic_number(complete_graph(41), guards=relaxed).colours_used == 41


@settings(max_examples=150)
@given(small_graphs())
def test_colouring_and_clique_match_brute_force(g):
    cert = chromatic_number(g)
    assert cert.is_proper(g)
    assert cert.colours_used == brute_chromatic_number(g)
    size, witness = clique_number(g)
    assert g.is_clique(witness) and size == brute_clique_number(g)
    assert size <= cert.colours_used
    dsat = dsatur_colouring(g)
    assert all(dsat[u] != dsat[v] for u, v in g.edges())


@pytest.mark.parametrize("g,expected", [
    (build_graph(5, []), 5), (complete_graph(5), 1), (cycle_graph(7), 3)])
def test_max_independent_set_examples(g, expected):
    s = max_independent_set(g)
    assert len(s) == expected and g.is_independent(s)
    assert brute_clique_number(g.complement()) == expected


def test_ramsey_on_all_six_vertex_graphs():
    graphs = catalog(6)
    assert len(graphs) == 156
    for g in graphs:
        for p in range(4):
            out = ramsey_extract(g, p, 3 - p)
            assert out.kind != NEITHER
            assert len(out.vertices) >= 3
            if out.kind == CLIQUE:
                assert g.is_clique(out.vertices)
            else:
                assert g.is_independent(out.vertices)


def test_ramsey_examples():
    out = ramsey_extract(complete_graph(10), 4, 6)
    assert out.kind == CLIQUE and len(out.vertices) == 10
    assert ramsey_extract(cycle_graph(5), 1, 2).kind == NEITHER
    assert ramsey_extract(build_graph(4, []), 2, 2).kind == INDEPENDENT_SET


def test_connectivity_examples():
    for n in range(1, 8):
        assert vertex_connectivity(complete_graph(n)) == n - 1
        assert is_k_connected(complete_graph(n), n - 1)
        assert not is_k_connected(complete_graph(n), n)
    for n in range(4, 10):
        assert vertex_connectivity(cycle_graph(n)) == 2
    assert vertex_connectivity(path_graph(5)) == 1
    assert vertex_connectivity(build_graph(4, [(0, 1), (2, 3)])) == 0
    assert minimum_vertex_cut(complete_graph(4)) is None


@settings(max_examples=150)
@given(small_graphs())
def test_connectivity_matches_exhaustive_cutsets(g):
    brute = brute_connectivity(g)
    kappa = vertex_connectivity(g)
    if brute is None:
        assert g.is_complete() and kappa == max(g.n - 1, 0)
    else:
        assert kappa == brute
        cut = minimum_vertex_cut(g)
        assert len(cut) == brute
        keep = [v for v in range(g.n) if v not in cut]
        assert not g.induced(keep).is_connected()
    for k in range(0, 6):
        assert is_k_connected(g, k) == brute_k_connected(g, k)


def test_find_core_examples():
    res = find_k_connected_chromatic(complete_graph(7), 3)
    assert res.vertices == list(range(7)) and res.chromatic == 7
    res = find_k_connected_chromatic(cycle_graph(5), 2)
    assert res.vertices == list(range(5)) and res.chromatic == 3
    assert find_k_connected_chromatic(path_graph(4), 3).found is None


def _check_core(g, k):
    res = find_k_connected_chromatic(g, k)
    assert res.found is not None, res.trail
    sub = g.induced(res.vertices)
    assert is_k_connected(sub, k) and brute_k_connected(sub, k)
    assert chromatic_number(sub).colours_used >= k


def test_core_found_in_every_highly_chromatic_catalog_graph():
    k = 2
    threshold = 7  # ceil(49/16 * 2)
    hits = 0
    for n in range(threshold, 9):
        for g in catalog(n):
            if max(dsatur_colouring(g), default=-1) + 1 < threshold:
                continue
            if chromatic_number(g).colours_used >= threshold:
                hits += 1
                _check_core(g, k)
    assert hits >= 3


@settings(max_examples=60, deadline=None)
@given(small_graphs(9), st.integers(1, 4))
def test_core_output_always_reverifies(g, k):
    res = find_k_connected_chromatic(g, k)
    if res.found is not None:
        sub = g.induced(res.vertices)
        assert brute_k_connected(sub, k)
        assert brute_chromatic_number(sub) >= k


def _is_automorphism(g, m):
    return all(g.has_edge(u, v) == g.has_edge(m[u], m[v]) for u, v in combinations(range(g.n), 2))


def test_induced_embedding_examples():
    m = induced_embedding(complete_graph(3), complete_graph(4))
    assert m is not None and len(set(m.values())) == 3
    assert induced_embedding(path_graph(4), gen_complete_multipartite([2, 3])) is None
    g = petersen_graph()
    assert _is_automorphism(g, induced_embedding(g, g))


def test_self_embedding_is_identity():
    # the search tries images in increasing order, so the identity comes first
    for g in (petersen_graph(), gen_random(9, 0.5, 1), cycle_graph(6)):
        assert induced_embedding(g, g) == {v: v for v in range(g.n)}


@settings(max_examples=80)
@given(small_graphs(5), small_graphs(8))
def test_induced_embedding_preserves_adjacency_both_ways(h, g):
    m = induced_embedding(h, g)
    if m is None:
        # exhaustive refusal: no subset of the right size induces a copy
        from pabfree.oracles import is_isomorphic
        assert not any(is_isomorphic(h, g.induced(s)) for s in combinations(range(g.n), h.n))
        return
    assert len(set(m.values())) == h.n
    for u, v in combinations(range(h.n), 2):
        assert h.has_edge(u, v) == g.has_edge(m[u], m[v])


def test_guard_on_embedding_pattern():
    with pytest.raises(GuardError, match="max_embed_pattern"):
        induced_embedding(complete_graph(13), complete_graph(13))


def test_omega_at_most_chi_on_small_atlas():
    for g in atlas(6):
        assert clique_number(g)[0] <= chromatic_number(g).colours_used
