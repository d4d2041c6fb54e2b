import logging

import pytest

from evenpair.dimacs import (
    digest,
    is_dimacs,
    parse_dimacs,
    parse_edge_list,
    read_graph,
    write_dimacs,
    write_edge_list,
)
from evenpair.generators import named_instance
from evenpair.graph import Graph, contract
from exceptions.exceptions import GraphFormatError

C6BAR_DIMACS = """c complement of the 6-cycle
p edge 6 9
e 1 3
e 1 4
e 1 5
e 2 4
e 2 5
e 2 6
e 3 5
e 3 6
e 4 6
"""


def test_write_dimacs(p3: Graph):
    assert write_dimacs(p3) == "p edge 3 2\ne 1 2\ne 2 3\n"


def test_parse_dimacs(c6bar: Graph):
    g = parse_dimacs(C6BAR_DIMACS)
    assert g == c6bar
    assert parse_dimacs("p col 3 0\n") == Graph.from_edges(3, [])


def test_dimacs_round_trip(c6bar: Graph):
    for g in (c6bar, named_instance("snake-proper"), Graph.from_edges(1, [])):
        assert parse_dimacs(write_dimacs(g)) == g


def test_write_dimacs_compacts_sparse_ids(c6: Graph):
    merged, _fresh = contract(c6, 1, 5)
    text = write_dimacs(merged)
    assert text.startswith("p edge 5 5\n")
    assert parse_dimacs(text).vertices == (0, 1, 2, 3, 4)


def test_parse_dimacs_collapses_duplicates(caplog):
    with caplog.at_level(logging.WARNING):
        g = parse_dimacs("p edge 2 2\ne 1 2\ne 2 1\n")
    assert g.m == 1
    assert "declares 2 edges" in caplog.text


@pytest.mark.parametrize(
    "text, line_no",
    [
        ("p edge 2 1\ne 1 1\n", 2),
        ("p edge 2 1\ne 1 3\n", 2),
        ("e 1 2\np edge 2 1\n", 1),
        ("p edge 2 1\np edge 2 1\n", 2),
        ("p graph 2 1\n", 1),
        ("p edge two 1\n", 1),
        ("p edge 2 1\nx 1 2\n", 2),
        ("c only a comment\n", 0),
    ],
)
def test_parse_dimacs_errors(text: str, line_no: int):
    with pytest.raises(GraphFormatError) as info:
        parse_dimacs(text)
    assert info.value.line_no == line_no


def test_edge_list(c6: Graph):
    text = write_edge_list(c6)
    assert text.splitlines()[0] == "6 6"
    assert parse_edge_list(text) == c6
    assert parse_edge_list("# a path\n3 2\n0 1  # first edge\n1 2\n") == named_instance("p3")


def test_edge_list_errors():
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 1\n0 3\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("3 1\n0 1 2\n")
    with pytest.raises(GraphFormatError):
        parse_edge_list("")


def test_read_graph_sniffs_format(c6: Graph):
    assert is_dimacs(write_dimacs(c6))
    assert not is_dimacs(write_edge_list(c6))
    assert read_graph(write_dimacs(c6)) == c6
    assert read_graph(write_edge_list(c6)) == c6


def test_digest(c6: Graph, c6bar: Graph):
    assert digest(c6) == digest(named_instance("c6"))
    assert digest(c6) != digest(c6bar)
    assert len(digest(c6)) == 64
