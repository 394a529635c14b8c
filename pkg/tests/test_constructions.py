from fractions import Fraction

import pytest

from oracles import oracle_m
from sparseramsey.bounds import default_table
from sparseramsey.constructions import (
    build_gnkm,
    build_gstar,
    fiber_size,
    format_structure,
    gnkm_density_check,
    gstar_k_formula,
    gstar_size,
    kpq_sizes,
    kpq_witness,
    paths_parameters,
)
from sparseramsey.errors import InvalidParameterError, SizeLimitError, TableMissError
from sparseramsey.parameters import m1_density, m_density


def test_gnkm_shape():
    g = build_gnkm(4, 2, 1)
    assert (g.graph.n, g.graph.num_edges) == (10, 12)
    assert m_density(g.graph).value == Fraction(6, 5)
    assert g.fibers[(0, 1)] == (4,)
    for A, ids in g.fibers.items():
        for v in ids:
            assert set(g.graph.neighbors(v)) == set(A)
    g = build_gnkm(3, 3, 2)
    assert (g.graph.n, g.graph.num_edges) == (5, 6)


def test_gnkm_density_below_k():
    for n in range(2, 6):
        for k in range(1, n + 1):
            for m in (1, 2):
                g = build_gnkm(n, k, m)
                val = gnkm_density_check(g)
                assert val < k
                if g.graph.n <= 12:
                    assert val == oracle_m(g.graph)


def test_gnkm_limits():
    with pytest.raises(InvalidParameterError):
        build_gnkm(3, 4, 1)
    with pytest.raises(SizeLimitError):
        build_gnkm(40, 5, 10, budget=1000)


def test_fiber_size_and_path_parameters():
    assert fiber_size(2, 3, 1) == 6
    assert paths_parameters(3, 2, 2, 1, default_table()) == (3, 2)
    with pytest.raises(TableMissError):
        paths_parameters(5, 2, 2, 1, default_table())


def test_gstar_relaxed_small():
    gs = build_gstar(3, 2, 2, {"n": [3, 3], "m": [2, 2]}, relax=True)
    assert (gs.graph.n, gs.graph.num_edges) == (15, 24)
    assert not gs.canonical
    o = gs.orientation()
    o.check()
    assert o.max_indegree == 2
    assert m_density(gs.graph).value == Fraction(8, 5)
    assert m1_density(gs.graph).value == Fraction(12, 7)
    assert gstar_size(2, (3, 3), (2, 2)) == 15
    text = format_structure(gs)
    assert "non-canonical" in text and "# level 2" in text


def test_gstar_rejects_noncanonical_without_relax():
    with pytest.raises(InvalidParameterError):
        build_gstar(3, 2, 2, {"n": [3, 3], "m": [2, 2]})
    with pytest.raises(InvalidParameterError):
        build_gstar(3, 2, 2)


def test_gstar_canonical_size_exceeds_budget():
    # canonical sequences for (3, 2, 2) with n = 3 give 975 vertices
    gs = build_gstar(3, 2, 2, {"n": [3, 3]})
    assert gs.canonical and gs.graph.n == 975
    with pytest.raises(SizeLimitError):
        build_gstar(3, 2, 2, {"n": [3, 3]}, budget=500)


def test_kpq():
    assert kpq_sizes(2, 2, 2) == (3, 7)
    assert kpq_sizes(2, 2, 3) == (4, 19)
    assert m_density(kpq_witness(2, 2, 2)).value == Fraction(21, 10)


@pytest.mark.parametrize("length,r,k", [(3, 2, 2), (4, 2, 2), (3, 5, 3), (3, 6, 4), (5, 4, 3)])
def test_gstar_k_formula(length, r, k):
    assert gstar_k_formula(length, r) == k


def test_structure_sidecar():
    text = format_structure(build_gnkm(3, 2, 1))
    assert text.splitlines() == ["# G(3,2,1)", "0 1: 3", "0 2: 4", "1 2: 5"]
