import random
from itertools import combinations

import pytest

from sparseramsey.contract import contract_dense, find_maximal_dense, pull_back_edges
from sparseramsey.graph import Graph, complete_graph, cycle_graph, disjoint_union, random_gnp
from sparseramsey.parameters import m1_density


def _edges_in(G, S):
    S = set(S)
    return sum(1 for u, v in G.edges if u in S and v in S)


def _dense(G, S, r):
    return len(S) >= 2 and _edges_in(G, S) > r * (len(S) - 1)


def _brute_maximal(G, H, r):
    """No proper superset of ``H`` is dense."""
    rest = [v for v in range(G.n) if v not in H]
    for s in range(1, len(rest) + 1):
        for extra in combinations(rest, s):
            if _dense(G, set(H) | set(extra), r):
                return False
    return True


def test_none_when_sparse():
    assert find_maximal_dense(cycle_graph(6), 2) is None
    assert find_maximal_dense(cycle_graph(6), 1) == tuple(range(6))
    tree = Graph(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    cert = contract_dense(tree, 1)
    assert cert.family == ()
    cert.check(tree)


def test_k5_collapses_for_bound_two():
    G = disjoint_union(complete_graph(5), cycle_graph(6))
    H = find_maximal_dense(G, 2)
    assert H == (0, 1, 2, 3, 4)
    cert = contract_dense(G, 2)
    cert.check(G)
    assert cert.family == ((0, 1, 2, 3, 4),)
    assert cert.contracted.n == 7


def test_two_bridged_k4_form_one_dense_set():
    # maximality is taken literally: with r = 1 the union is still dense
    G = disjoint_union(complete_graph(4), complete_graph(4))
    G = Graph(8, list(G.edges) + [(3, 4)])
    assert find_maximal_dense(G, 1) == tuple(range(8))
    cert = contract_dense(G, 1)
    assert cert.family == (tuple(range(8)),)


def test_random_maximality_and_certificate():
    rng = random.Random(11)
    for _ in range(120):
        n = rng.randint(2, 9)
        G = random_gnp(n, rng.uniform(0.3, 0.9), rng)
        for r in (1, 2, 3):
            H = find_maximal_dense(G, r)
            if n >= 2 and m1_density(G).value > r:
                assert H is not None and _dense(G, H, r) and _brute_maximal(G, H, r)
            else:
                assert H is None
            cert = contract_dense(G, r)
            cert.check(G)


def test_pull_back_counts_multiplicities():
    G = disjoint_union(complete_graph(5), cycle_graph(6))
    G = Graph(G.n, list(G.edges) + [(0, 5), (1, 5), (2, 6)])
    cert = contract_dense(G, 2)
    groups = pull_back_edges(G, cert.vmap)
    for (a, b), es in groups.items():
        assert cert.contracted.multiplicity(a, b) == len(es)
    assert sum(len(es) for es in groups.values()) == cert.contracted.num_edges


def test_invalid_bound():
    with pytest.raises(ValueError):
        contract_dense(complete_graph(3), 0)


def test_disjoint_k4_pair_and_pendant():
    # a dense set need not be connected: 12 edges on 8 vertices beat 1 * 7
    G = disjoint_union(complete_graph(4), complete_graph(4))
    assert find_maximal_dense(G, 1) == tuple(range(8))
    P = Graph(5, list(complete_graph(4).edges) + [(3, 4)])
    assert find_maximal_dense(P, 1) == (0, 1, 2, 3, 4)
    cert = contract_dense(complete_graph(5), 2)
    assert cert.family == ((0, 1, 2, 3, 4),)
    assert cert.contracted.n == 1 and cert.contracted.num_edges == 0
