import networkx as nx
import pytest

from evenpair.graph import (
    Graph,
    complement,
    complete_set,
    connected_components,
    contract,
    from_networkx,
    induced_subgraph,
    is_chordless_path,
    is_clique,
    is_co_connected,
    is_disjoint_union_of_cliques,
    is_simplicial,
    neighbors,
    relabel,
    shortest_path,
    to_networkx,
)
from exceptions.exceptions import (
    AdjacentVerticesError,
    EmptyVertexSetError,
    PreconditionViolationError,
    UnknownVertexError,
)


def test_graph_basics(c6: Graph):
    assert c6.n == 6
    assert c6.m == 6
    assert c6.edges() == [(0, 1), (0, 5), (1, 2), (2, 3), (3, 4), (4, 5)]
    assert c6.degree(0) == 2
    assert neighbors(c6, 0) == {1, 5}
    assert c6.sorted_neighbors(0) == (1, 5)
    assert c6.has_edge(5, 0)
    assert not c6.has_edge(0, 3)


def test_graph_rejects_bad_input():
    with pytest.raises(PreconditionViolationError) as info:
        Graph([0, 1], [(1, 1)])
    assert "self-loop" in str(info.value)
    with pytest.raises(PreconditionViolationError) as info:
        Graph([0, 0])
    assert "duplicate vertex id 0" in str(info.value)
    with pytest.raises(UnknownVertexError):
        Graph([0, 1], [(0, 2)])


def test_unknown_vertex(c6: Graph):
    with pytest.raises(UnknownVertexError):
        c6.adj(17)
    with pytest.raises(UnknownVertexError):
        is_clique(c6, [0, 17])


def test_equality_ignores_labels(p3: Graph):
    labelled = relabel(p3, {0: "a", 1: "b", 2: "c"})
    assert labelled == p3
    assert labelled.label(1) == "b"
    assert p3.label(1) == "1"


def test_complement(c6: Graph, c6bar: Graph):
    assert complement(c6) == c6bar
    assert complement(complement(c6)) == c6
    assert all(c6bar.degree(v) == 3 for v in c6bar)


def test_induced_subgraph(c6: Graph):
    sub = induced_subgraph(c6, [0, 1, 2, 4])
    assert sub.vertices == (0, 1, 2, 4)
    assert sub.edges() == [(0, 1), (1, 2)]


def test_contract(c6: Graph):
    merged, fresh = contract(c6, 1, 5)
    assert fresh == 6
    assert merged.n == 5
    assert merged.adj(6) == {0, 2, 4}
    assert 1 not in merged and 5 not in merged
    assert merged.adj(0) == {6}
    assert merged.adj(3) == {2, 4}


def test_contract_never_reuses_ids(c6: Graph):
    once, first = contract(c6, 1, 5)
    twice, second = contract(once, 0, 2)
    assert (first, second) == (6, 7)
    assert twice.adj(7) == {3, 6}


def test_contract_labels_merged_vertex(p3: Graph):
    labelled = relabel(p3, {0: "a", 1: "b", 2: "c"})
    merged, fresh = contract(labelled, 0, 2)
    assert merged.label(fresh) == "a+c"


def test_contract_rejects_adjacent_or_equal(c6: Graph):
    with pytest.raises(AdjacentVerticesError):
        contract(c6, 0, 1)
    with pytest.raises(PreconditionViolationError):
        contract(c6, 2, 2)


def test_is_co_connected(c6: Graph):
    assert is_co_connected(c6, [0, 3])
    assert not is_co_connected(c6, [0, 1])
    assert is_co_connected(c6, [4])
    with pytest.raises(EmptyVertexSetError):
        is_co_connected(c6, [])


def test_complete_set(c6: Graph):
    assert complete_set(c6, [0]) == {1, 5}
    assert complete_set(c6, [0, 2]) == {1}
    assert complete_set(c6, [0, 3]) == frozenset()
    with pytest.raises(EmptyVertexSetError):
        complete_set(c6, [])


def test_simplicial_and_cliques(p3: Graph, k4: Graph):
    assert is_simplicial(p3, 0)
    assert not is_simplicial(p3, 1)
    assert is_clique(k4, k4.vertices)
    assert is_clique(p3, [])
    assert not is_clique(p3, [0, 2])


def test_disjoint_union_of_cliques(p3: Graph):
    k3_k1 = Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)])
    assert is_disjoint_union_of_cliques(k3_k1)
    assert connected_components(k3_k1) == [{0, 1, 2}, {3}]
    assert not is_disjoint_union_of_cliques(p3)


def test_is_chordless_path(c6: Graph):
    assert is_chordless_path(c6, [1, 2, 3, 4, 5])
    assert not is_chordless_path(c6, [0, 1, 2, 3, 4, 5])
    assert not is_chordless_path(c6, [0, 2])
    assert not is_chordless_path(c6, [0, 1, 0])
    assert is_chordless_path(c6, [3])


def test_shortest_path(c6: Graph):
    assert shortest_path(c6, 1, 5).vertices == (1, 0, 5)
    assert shortest_path(c6, 1, 5, forbidden={0}).vertices == (1, 2, 3, 4, 5)
    assert shortest_path(c6, 1, 5, forbidden={0, 3}) is None
    assert shortest_path(c6, 2, 2).vertices == (2,)


def test_shortest_path_rejects_forbidden_endpoint(c6: Graph):
    with pytest.raises(PreconditionViolationError):
        shortest_path(c6, 1, 5, forbidden={5})


def test_networkx_interchange(c6bar: Graph):
    G = to_networkx(c6bar)
    assert G.number_of_edges() == 9
    assert from_networkx(G) == c6bar
    assert from_networkx(nx.petersen_graph()).m == 15
