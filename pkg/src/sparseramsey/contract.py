"""Contraction of over-dense subgraphs.

A vertex set ``H`` is *dense* for a bound ``r`` when ``e(H) > r (|H| - 1)``.
:func:`contract_dense` repeatedly finds maximal dense sets, contracts a
vertex-disjoint batch of them and stops once the contracted multigraph has
``m1 <= r``. Every family member is reported as a set of original vertices.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, MultiGraph, contract_family
from .parameters import _best_superset, _edges_within, _m1_core, _wadj, m1_density

__all__ = [
    "ContractionCertificate",
    "find_maximal_dense",
    "contract_dense",
    "pull_back_edges",
]


@dataclass(frozen=True)
class ContractionCertificate:
    """Family of disjoint dense vertex sets and the graph with each set contracted.

    ``vmap[v]`` is the contracted vertex holding original vertex ``v``; the
    ``i``-th family member becomes contracted vertex ``i``.
    """

    family: tuple
    contracted: MultiGraph
    vmap: tuple
    r: int

    def check(self, G) -> None:
        wadj = _wadj(G)
        seen = set()
        for H in self.family:
            if seen & set(H):
                raise AssertionError("family members overlap")
            seen |= set(H)
            if _edges_within(wadj, H) <= self.r * (len(H) - 1):
                raise AssertionError(f"member {H} is not dense")
        M, vmap = contract_family(G, self.family)
        if M != self.contracted or tuple(vmap) != self.vmap:
            raise AssertionError("contracted graph does not match the family")
        if M.n >= 2 and m1_density(M).value > self.r:
            raise AssertionError("contracted graph still has m1 > r")


def _grow(wadj, verts, H, r):
    """Enlarge the dense set ``H`` until no proper superset inside ``verts`` is dense.

    ``e(S) > r(|S|-1)`` is ``e(S) - r|S| > -r``; the largest maximiser of
    ``e(S) - r|S|`` over supersets of a forced set comes from one min cut.
    """
    H = set(H)
    while True:
        grown = False
        obj, S = _best_superset(wadj, verts, H, r, 1, maximal=True)
        if obj > -r and len(S) > len(H):
            H = set(S)
            continue
        # the best superset may be H itself; probe each outside vertex
        for x in verts:
            if x in H:
                continue
            obj, S = _best_superset(wadj, verts, H | {x}, r, 1, maximal=True)
            if obj > -r:
                H = set(S)
                grown = True
                break
        if not grown:
            return sorted(H)


def _maximal_dense(wadj, verts, r, avoid=frozenset()):
    """A maximal dense set of ``verts`` seeded by the densest part outside ``avoid``."""
    pool = [v for v in verts if v not in avoid]
    if len(pool) < 2:
        return None
    g, W = _m1_core(wadj, pool)
    if g <= r:
        return None
    return _grow(wadj, sorted(verts), W, r)


def find_maximal_dense(G, r: int):
    """A vertex set ``H`` with ``e(H)/(|H|-1) > r`` that no proper superset extends.

    Returns ``None`` when ``m1(G) <= r``. The seed is the lexicographically
    least densest set, so the answer is deterministic.
    """
    if G.n < 2:
        return None
    wadj = _wadj(G)
    H = _maximal_dense(wadj, list(range(G.n)), r)
    return None if H is None else tuple(H)


def contract_dense(G, r: int) -> ContractionCertificate:
    """Contract maximal dense sets round by round until ``m1 <= r``."""
    if r < 1:
        raise ValueError("r must be at least 1")
    cur = G if isinstance(G, MultiGraph) else MultiGraph.from_graph(G)
    # members[v]: original vertices behind vertex v of the current multigraph
    members = [[v] for v in range(G.n)]
    while cur.n >= 2:
        wadj = _wadj(cur)
        verts = list(range(cur.n))
        batch = []
        used: set = set()
        while True:
            H = _maximal_dense(wadj, verts, r, used)
            if H is None or used & set(H):
                break
            batch.append(H)
            used |= set(H)
        if not batch:
            break
        nxt, vmap = contract_family(cur, batch)
        assert nxt.n < cur.n, "contraction made no progress"
        merged = [[] for _ in range(nxt.n)]
        for v in range(cur.n):
            merged[vmap[v]].extend(members[v])
        members = [sorted(m) for m in merged]
        cur = nxt
    family = sorted(tuple(m) for m in members if len(m) > 1)
    for H in family:
        for v in H:
            assert 0 <= v < G.n
    M, vmap = contract_family(G, family)
    if M.n >= 2:
        assert m1_density(M).value <= r
    return ContractionCertificate(tuple(family), M, tuple(vmap), r)


def pull_back_edges(G, vmap) -> dict:
    """Original edges grouped by the contracted pair they map to.

    ``out[(a, b)]`` lists, in increasing order, the edges of ``G`` running
    between contracted vertices ``a < b``; its length is the multiplicity of
    ``(a, b)`` in the contracted multigraph.
    """
    out: dict = {}
    for u, v in (G.edges if isinstance(G, Graph) else G.edge_list()):
        a, b = vmap[u], vmap[v]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        out.setdefault(key, []).append((u, v))
    return out

