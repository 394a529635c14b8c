from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from oracles import oracle_degeneracy, oracle_m, oracle_m1, oracle_m1k, oracle_m2
from sparseramsey.errors import InvalidBipartitionError, InvalidParameterError, ParameterUndefinedError
from sparseramsey.graph import (
    Graph,
    MultiGraph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    disjoint_union,
    p3_witness,
    path_graph,
    random_gnp,
    star_graph,
)
from sparseramsey.parameters import (
    bipartition,
    chromatic_number,
    clique_number,
    d_bipartite,
    m1_density,
    m1k_density,
    m2_density,
    m_density,
    max_min_degree,
    min_d_over_bipartitions,
    ratio,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(1, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


def test_known_values():
    assert m_density(complete_graph(6)).value == Fraction(5, 2)
    assert m1_density(complete_graph(6)).value == 3
    assert m_density(p3_witness()).value == 1
    assert m2_density(cycle_graph(4)).value == Fraction(3, 2)
    assert m2_density(complete_graph(3)).value == 2
    assert m_density(complete_bipartite_graph(3, 7)).value == Fraction(21, 10)
    assert m_density(Graph(3)).value == 0


def test_witness_attains_value():
    G = disjoint_union(complete_graph(4), cycle_graph(5))
    res = m_density(G)
    assert res.value == Fraction(3, 2) and res.witness == (0, 1, 2, 3)
    assert ratio(G, res.witness) == res.value
    res = m1_density(G)
    assert ratio(G, res.witness, 1) == res.value == 2


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_densities_match_oracles(G):
    assert m_density(G).value == oracle_m(G)
    if G.n >= 2:
        assert m1_density(G).value == oracle_m1(G)
    for k in (2, 3, 4, 6):
        assert m1k_density(G, k).value == oracle_m1k(G, k)
    if G.n >= 3:
        assert m2_density(G).value == oracle_m2(G)


def test_m1k_methods_agree():
    for seed in range(15):
        G = random_gnp(11, 0.2 + seed / 30, seed)
        for k in (4, 7, 9):
            a = m1k_density(G, k, method="table")
            b = m1k_density(G, k, method="bb")
            assert a.value == b.value
            assert ratio(G, b.witness, 1) == b.value and len(b.witness) >= k


def test_m1k_empty_range_convention():
    res = m1k_density(path_graph(2), 5)
    assert res.value == 0 and res.witness == () and res.convention
    with pytest.raises(InvalidParameterError):
        m1k_density(path_graph(2), 1)


def test_m2_undefined_below_three_vertices():
    with pytest.raises(ParameterUndefinedError):
        m2_density(path_graph(1))


def test_multigraph_densities():
    M = MultiGraph(3, [(0, 1), (0, 1), (0, 1), (1, 2)])
    assert m_density(M).value == Fraction(3, 2)
    assert m1_density(M).value == 3


def test_bipartite_parameters():
    K = complete_bipartite_graph(2, 5)
    A, B = bipartition(K)
    assert d_bipartite(K, (A, B)) == 2
    assert min_d_over_bipartitions(K) == 2
    assert bipartition(cycle_graph(5)) is None
    with pytest.raises(InvalidBipartitionError):
        d_bipartite(path_graph(2), ((0, 1), (2,)))
    # two stars: flipping one component lowers d
    G = disjoint_union(star_graph(4), star_graph(4))
    assert min_d_over_bipartitions(G) == 1


def test_small_invariants():
    assert chromatic_number(cycle_graph(5)) == 3
    assert chromatic_number(complete_graph(5)) == 5
    assert chromatic_number(path_graph(4)) == 2
    assert clique_number(complete_graph(6)) == 6
    assert clique_number(cycle_graph(4)) == 2
    for seed in range(20):
        G = random_gnp(7, 0.5, seed)
        assert max_min_degree(G) == oracle_degeneracy(G)
