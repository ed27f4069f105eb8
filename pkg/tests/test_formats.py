import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pabfree import formats
from pabfree.formats import (EdgeCountMismatch, EmptyInput, FormatError, MalformedHeader,
                             MalformedLine, TrailingJunk, TruncatedData, emit_dimacs, emit_edgelist,
                             emit_graph6, parse_dimacs, parse_edgelist, parse_graph6)
from pabfree.graph import build_graph, complete_graph, gen_random

from _support import atlas, to_nx


@st.composite
def graphs(draw, max_n=70):
    n = draw(st.integers(0, max_n))
    p = draw(st.floats(0, 1))
    return gen_random(n, p, draw(st.integers(0, 2 ** 32)))


def test_graph6_known_string_round_trips():
    g = parse_graph6("D?{")
    assert g.n == 5
    assert emit_graph6(g) == "D?{"


def test_graph6_single_vertex():
    assert emit_graph6(build_graph(1, [])) == "@"
    assert emit_graph6(build_graph(0, [])) == "?"


def test_graph6_header_and_newline_accepted():
    assert parse_graph6(">>graph6<<D?{\n") == parse_graph6("D?{")


@pytest.mark.parametrize("text,err", [
    ("", EmptyInput),
    (">>graph7<<D?{", MalformedHeader),
    ("~??", MalformedHeader),
    ("D?", TruncatedData),
    ("D?{{", TrailingJunk),
    ("A`", TrailingJunk),  # n=2 uses one bit; the rest must be zero padding
])
def test_graph6_errors_are_distinct(text, err):
    with pytest.raises(err) as info:
        parse_graph6(text)
    assert "byte" in str(info.value)


@given(graphs())
def test_graph6_matches_networkx_encoder(g):
    ref = nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert emit_graph6(g) == ref
    assert parse_graph6(ref) == g


def test_graph6_long_size_prefix():
    g = gen_random(100, 0.1, 5)
    text = emit_graph6(g)
    assert text.startswith("~")
    assert parse_graph6(text) == g


def test_graph6_bit_exact_on_catalog():
    for g in atlas(5):
        text = emit_graph6(g)
        assert emit_graph6(parse_graph6(text)) == text


def test_dimacs_round_trip_and_header():
    g = complete_graph(4)
    text = emit_dimacs(g)
    assert text.splitlines()[0] == "p edge 4 6"
    assert parse_dimacs(text) == g
    assert emit_dimacs(parse_dimacs(text)) == text


def test_dimacs_comments_and_order_accepted():
    g = parse_dimacs("c hello\np edge 3 2\ne 3 2\ne 1 2\n")
    assert g.edges() == [(0, 1), (1, 2)]


@pytest.mark.parametrize("text,err", [
    ("", EmptyInput),
    ("e 1 2\n", MalformedHeader),
    ("p edge 3 2\ne 1 2\n", EdgeCountMismatch),
    ("p edge 3 1\ne 1 4\n", MalformedLine),
    ("p edge 3 1\ne 2 2\n", MalformedLine),
    ("p edge 3 2\ne 1 2\ne 2 1\n", MalformedLine),
    ("p edge x 1\n", MalformedHeader),
    ("p edge 3 0\nq\n", MalformedLine),
])
def test_dimacs_errors(text, err):
    with pytest.raises(err):
        parse_dimacs(text)


def test_dimacs_errors_carry_line_numbers():
    with pytest.raises(FormatError) as info:
        parse_dimacs("p edge 3 1\nc fine\ne 1 9\n")
    assert info.value.line == 3


@given(graphs(30))
def test_dimacs_round_trip(g):
    text = emit_dimacs(g)
    assert parse_dimacs(text) == g
    assert emit_dimacs(parse_dimacs(text)) == text


@given(graphs(30))
def test_edgelist_round_trip(g):
    assert parse_edgelist(emit_edgelist(g)) == g


def test_edgelist_without_header_and_errors():
    assert parse_edgelist("0 1\n1 2\n").n == 3
    with pytest.raises(MalformedLine):
        parse_edgelist("0 1 2\n")
    with pytest.raises(MalformedLine):
        parse_edgelist("0 x\n")
    with pytest.raises(MalformedLine):
        parse_edgelist("# n 2\n0 5\n")


def test_format_inference(tmp_path):
    assert formats.infer_format("a.g6") == "graph6"
    assert formats.infer_format("a.COL") == "dimacs"
    assert formats.infer_format("a.edges") == "edgelist"
    with pytest.raises(FormatError):
        formats.infer_format("a.bin")
    path = tmp_path / "k4.col"
    path.write_text(emit_dimacs(complete_graph(4)))
    assert formats.read_graph(path) == complete_graph(4)
    assert formats.read_graph(path, "dimacs") == complete_graph(4)
