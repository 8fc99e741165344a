import random

import networkx as nx
import pytest

from nbpoly.errors import CapacityError, ParseError
from nbpoly.graph import family, from_edge_list
from nbpoly.graphio import (
    iter_graph6_file,
    load_graph,
    parse_edge_list,
    parse_family,
    parse_graph6,
    write_edge_list,
    write_graph6,
)
from tests.reference import to_nx


def test_graph6_examples():
    assert parse_graph6(b"A_") == family("complete", 2)
    assert parse_graph6(b"B?") == family("empty", 3)
    assert write_graph6(family("complete", 2)) == b"A_"
    # golden for P3, from networkx's encoder
    assert nx.to_graph6_bytes(nx.path_graph(3), header=False).strip() == b"Bg"
    assert write_graph6(family("path", 3)) == b"Bg"
    assert parse_graph6("Bg\n") == family("path", 3)
    assert parse_graph6(b">>graph6<<A_") == family("complete", 2)


def test_graph6_matches_networkx_encoder():
    rng = random.Random(17)
    for _ in range(200):
        n = rng.randint(0, 64)
        G = family("random", n, rng.random(), rng.randrange(10**6)) if n else family("empty", 0)
        expected = nx.to_graph6_bytes(to_nx(G), header=False).strip()
        assert write_graph6(G) == expected
        assert parse_graph6(expected) == G


@pytest.mark.parametrize(
    "data,offset",
    [
        (b"A ", 1),  # character below 63
        (b"B", 1),  # truncated bit stream
        (b"A`", 1),  # padding bit set (0b100001)
        (b"A_?", 2),  # trailing byte
        (b"", 0),
    ],
)
def test_graph6_errors(data, offset):
    with pytest.raises(ParseError) as info:
        parse_graph6(data)
    assert info.value.offset == offset


def test_graph6_capacity():
    big = nx.to_graph6_bytes(nx.empty_graph(65), header=False).strip()
    with pytest.raises(CapacityError):
        parse_graph6(big)
    with pytest.raises(CapacityError):
        parse_graph6(b"~~??????")


def test_edge_list_round_trip():
    text = "3 2\n0 1\n1 2\n"
    G = parse_edge_list(text)
    assert G == family("path", 3)
    assert write_edge_list(G) == text
    assert write_edge_list(family("cycle", 4)) == "4 4\n0 1\n0 3\n1 2\n2 3\n"


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 2\n0 1\n", "3 1\n0 0\n", "3 1\n0 9\n", "x y\n", "2 1\n0 1 2\n"],
)
def test_edge_list_errors(text):
    with pytest.raises(ParseError):
        parse_edge_list(text)


def test_edge_list_random_round_trip():
    rng = random.Random(2)
    for _ in range(100):
        G = family("random", rng.randint(1, 30), rng.random(), rng.randrange(10**6))
        assert parse_edge_list(write_edge_list(G)) == G


def test_parse_family():
    assert parse_family("family:cycle:4") == family("cycle", 4)
    assert parse_family("random:10,0.5,7") == family("random", 10, 0.5, 7)
    assert parse_family("complete_bipartite:2,3") == family("complete_bipartite", 2, 3)


def test_load_graph(tmp_path):
    g6 = tmp_path / "k2.g6"
    g6.write_text("A_\n")
    el = tmp_path / "p3.txt"
    el.write_text("3 2\n0 1\n1 2\n")
    sniff = tmp_path / "p3"
    sniff.write_text("Bg\n")
    assert load_graph(str(g6)).format == "graph6"
    doc = load_graph(str(el))
    assert doc.format == "edge-list" and doc.graph == family("path", 3)
    assert load_graph(str(sniff)).graph == family("path", 3)
    assert load_graph("family:path:3").format == "family"
    with pytest.raises(ParseError):
        load_graph(str(tmp_path / "missing"))


def test_corpus_file(tmp_path):
    path = tmp_path / "corpus.g6"
    path.write_bytes(b"A_\n\nBg\nB?\n")
    entries = list(iter_graph6_file(path))
    assert [label for label, _ in entries] == ["A_", "Bg", "B?"]
    path.write_bytes(b"A_\nB\n")
    with pytest.raises(ParseError, match=":2:"):
        list(iter_graph6_file(path))


def test_from_edge_list_and_graph6_agree():
    G = from_edge_list(5, [(0, 4), (1, 3)])
    assert parse_graph6(write_graph6(G)) == G
