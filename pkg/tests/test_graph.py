import pytest

from sparseramsey.errors import InvalidFamilyError, InvalidParameterError
from sparseramsey.graph import (
    Graph,
    MultiGraph,
    build_named,
    complete_bipartite_graph,
    complete_graph,
    contract_family,
    cycle_graph,
    degeneracy_order,
    disjoint_union,
    format_edgelist,
    format_multigraph,
    induced_subgraph,
    p3_witness,
    parse_edgelist,
    path_graph,
    random_gnp,
    read_edgelist,
    star_graph,
    write_edgelist,
)
from oracles import oracle_degeneracy


def test_edges_are_normalised_and_sorted():
    G = Graph(4, [(3, 1), (0, 2), (1, 0)])
    assert G.edges == ((0, 1), (0, 2), (1, 3))
    assert G.edge_index(3, 1) == 2
    assert G.has_edge(2, 0) and not G.has_edge(2, 3)
    assert G.degrees() == [2, 2, 1, 1]


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 5)], [(0, 1), (1, 0)]])
def test_bad_edges_rejected(edges):
    with pytest.raises(InvalidParameterError):
        Graph(3, edges)


def test_named_generators():
    assert complete_graph(5).num_edges == 10
    assert complete_bipartite_graph(2, 3).num_edges == 6
    assert path_graph(3).n == 4 and path_graph(3).num_edges == 3
    assert cycle_graph(5).num_edges == 5
    assert star_graph(4).degree(0) == 4
    assert build_named("complete-bipartite", 3, 7).num_edges == 21
    with pytest.raises(InvalidParameterError):
        build_named("wheel", 5)
    with pytest.raises(InvalidParameterError):
        build_named("path", 1, 2)


def test_p3_witness_shape():
    W = p3_witness()
    assert (W.n, W.num_edges) == (10, 10)
    assert sorted(W.degrees()) == [1] * 5 + [3] * 5


def test_disjoint_union_and_induced():
    G = disjoint_union(complete_graph(3), path_graph(2))
    assert G.n == 6 and G.num_edges == 5
    H, relabel = induced_subgraph(G, [4, 3, 5])
    assert relabel == {3: 0, 4: 1, 5: 2}
    assert H.edges == ((0, 1), (1, 2))


def test_contract_family_keeps_outside_edges():
    G = complete_graph(4)
    M, vmap = contract_family(G, [[0, 1, 2]])
    assert vmap == [0, 0, 0, 1]
    assert M.n == 2 and M.multiplicity(0, 1) == 3 and M.num_edges == 3
    with pytest.raises(InvalidFamilyError):
        contract_family(G, [[0, 1], [1, 2]])
    with pytest.raises(InvalidFamilyError):
        contract_family(G, [[]])


def test_multigraph_basics():
    M = MultiGraph(3, [(0, 1), (1, 0), (1, 2)])
    assert M.multiplicity(0, 1) == 2 and M.num_edges == 3
    assert M.edge_list() == [(0, 1), (0, 1), (1, 2)]
    assert M.degree(1) == 3
    assert M.underlying().edges == ((0, 1), (1, 2))
    assert format_multigraph(M) == "3 2\n0 1 2\n1 2 1\n"
    with pytest.raises(InvalidParameterError):
        MultiGraph(2, [(1, 1)])


def test_degeneracy_matches_oracle():
    for seed in range(60):
        G = random_gnp(8, 0.1 + seed / 70, seed)
        order, d = degeneracy_order(G)
        assert d == oracle_degeneracy(G)
        pos = {v: i for i, v in enumerate(order)}
        back = [sum(1 for u in G.neighbors(v) if pos[u] < pos[v]) for v in range(G.n)]
        assert max(back, default=0) <= d


def test_edgelist_roundtrip(tmp_path):
    G = random_gnp(9, 0.4, 3)
    text = format_edgelist(G)
    assert parse_edgelist(text) == G
    p = tmp_path / "g.el"
    write_edgelist(G, p)
    assert read_edgelist(p) == G
    assert parse_edgelist("# comment\n3 1\n\n0 2\n") == Graph(3, [(0, 2)])


@pytest.mark.parametrize(
    "text",
    ["", "3\n", "3 2\n0 1\n", "3 1\n0 3\n", "3 1\n1 0\n", "3 1\n0 1 2\n", "x y\n"],
)
def test_edgelist_errors(text):
    with pytest.raises(ValueError):
        parse_edgelist(text)
