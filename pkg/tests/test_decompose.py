import math
import random

import pytest

from oracles import component_diameters, is_forest, oracle_degeneracy
from sparseramsey.decompose import (
    INFINITY,
    a_d_exact,
    acyclic_orient,
    nash_williams,
    orient_by_order,
    split_into_star_forests,
)
from sparseramsey.errors import InfeasibleError, NotAForestError, SizeLimitError
from sparseramsey.graph import (
    Graph,
    MultiGraph,
    complete_graph,
    cycle_graph,
    path_graph,
    random_gnp,
    star_graph,
)
from sparseramsey.parameters import m1_density


def _check_partition(G, part):
    part.check()
    classes = part.edge_classes()
    assert all(is_forest(G.n, cls) for cls in classes)
    assert len(classes) == math.ceil(m1_density(G).value)


@pytest.mark.parametrize("n", [2, 3, 5, 8, 11])
def test_complete_graph_arboricity(n):
    G = complete_graph(n)
    _check_partition(G, nash_williams(G))


def test_random_partitions():
    rng = random.Random(4)
    for _ in range(80):
        G = random_gnp(rng.randint(2, 25), rng.random(), rng)
        if G.num_edges:
            _check_partition(G, nash_williams(G))


def test_multigraph_partition():
    M = MultiGraph(3, [(0, 1), (0, 1), (0, 1), (1, 2)])
    part = nash_williams(M)
    part.check()
    assert len(part.classes) == 3


def test_star_split():
    rng = random.Random(9)
    for _ in range(50):
        n = rng.randint(2, 30)
        edges = [(rng.randrange(v), v) for v in range(1, n) if rng.random() < 0.8]
        a, b = split_into_star_forests(edges, n)
        assert sorted(a + b) == sorted(edges)
        assert all(d <= 2 for d in component_diameters(n, a) + component_diameters(n, b))
    with pytest.raises(NotAForestError):
        split_into_star_forests(cycle_graph(3).edges)


def test_orient_by_order():
    G = complete_graph(4)
    o = orient_by_order(G, [3, 2, 1, 0])
    o.check()
    assert o.indegrees() == [3, 2, 1, 0]


def test_acyclic_orient_matches_degeneracy():
    rng = random.Random(2)
    for _ in range(100):
        G = random_gnp(rng.randint(1, 8), rng.random(), rng)
        d = oracle_degeneracy(G)
        for k in range(1, 6):
            if k >= d:
                o = acyclic_orient(G, k)
                o.check()
                assert o.max_indegree <= k
                # success certifies e(H) <= k(|H|-1), i.e. m1 <= k
                if G.n >= 2:
                    assert m1_density(G).value <= k
            else:
                with pytest.raises(InfeasibleError) as info:
                    acyclic_orient(G, k)
                assert info.value.witness


def test_k4_has_m1_two_but_needs_indegree_three():
    # the sparse-enough graph K4 is 3-degenerate
    G = complete_graph(4)
    assert m1_density(G).value == 2
    with pytest.raises(InfeasibleError):
        acyclic_orient(G, 2)
    assert acyclic_orient(G, 3).max_indegree == 3


def test_a_d_values():
    assert a_d_exact(path_graph(3), 2) == 2
    assert a_d_exact(star_graph(6), 2) == 1
    assert a_d_exact(path_graph(3), 3) == 1
    assert a_d_exact(complete_graph(4), INFINITY) == 2
    assert a_d_exact(complete_graph(4), 2) == 3
    assert a_d_exact(Graph(3), 2) == 0
    with pytest.raises(SizeLimitError):
        a_d_exact(complete_graph(7), 2)
    with pytest.raises(ValueError):
        a_d_exact(path_graph(2), 1)
