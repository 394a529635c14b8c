"""Exact graph density parameters and small-graph invariants.

``m`` and ``m1`` are found by Dinkelbach iteration over a parametric min-cut
(Goldberg's densest-subgraph network), so values are exact rationals on graphs
of any size. The size-constrained ``m1(G, k)`` and the 2-density ``m2`` use
exhaustive subset tables for small inputs; ``m1(G, k)`` falls back to a
branch-and-bound driven by the min-cut bound between 21 and 24 vertices.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

import numpy as np

from .errors import (
    InvalidBipartitionError,
    InvalidParameterError,
    ParameterUndefinedError,
    SizeLimitError,
)
from .flow import FlowNetwork
from .graph import Graph, degeneracy_order

__all__ = [
    "DensityWitness",
    "m_density",
    "m1_density",
    "m1k_density",
    "m2_density",
    "ratio",
    "d_bipartite",
    "bipartition",
    "min_d_over_bipartitions",
    "max_min_degree",
    "chromatic_number",
    "clique_number",
    "SUBSET_TABLE_LIMIT",
    "M1K_LIMIT",
]

SUBSET_TABLE_LIMIT = 20
M1K_LIMIT = 24

EMPTY_RANGE = "empty maximization: value 0 by convention"


@dataclass(frozen=True)
class DensityWitness:
    value: Fraction
    witness: tuple
    convention: Optional[str] = None


def _wadj(G) -> list[dict[int, int]]:
    adj: list[dict[int, int]] = [dict() for _ in range(G.n)]
    for (u, v), w in G.weighted_edges():
        adj[u][v] = adj[u].get(v, 0) + w
        adj[v][u] = adj[v].get(u, 0) + w
    return adj


def _edges_within(wadj, S) -> int:
    S = set(S)
    return sum(w for u in S for v, w in wadj[u].items() if v in S) // 2


def ratio(G, S: Iterable[int], offset: int = 0) -> Fraction:
    """``e(G[S]) / (|S| - offset)`` evaluated exactly."""
    S = set(S)
    return Fraction(_edges_within(_wadj(G), S), len(S) - offset)


def _best_superset(wadj, verts, forced, p, q, maximal=False):
    """Maximise ``q*e(S) - p*|S|`` over ``forced <= S <= verts``.

    Returns ``(objective, S)``; ``S`` is the smallest maximiser, or the largest
    one when ``maximal`` is set.
    """
    idx = {v: i for i, v in enumerate(verts)}
    N = len(verts)
    s, t = N, N + 1
    deg = [0] * N
    pairs = []
    for v in verts:
        i = idx[v]
        for u, w in wadj[v].items():
            j = idx.get(u)
            if j is not None:
                deg[i] += w
                if i < j:
                    pairs.append((i, j, w))
    M = q * max(deg, default=0)
    big = N * M + 2 * p * N + 2 * q * sum(w for _, _, w in pairs) + 1
    net = FlowNetwork(N + 2)
    for v in verts:
        i = idx[v]
        net.add_edge(s, i, big if v in forced else M)
        net.add_edge(i, t, M + 2 * p - q * deg[i])
    for i, j, w in pairs:
        net.add_edge(i, j, q * w, q * w)
    net.max_flow(s, t)
    if maximal:
        side = net.sink_side(t)
        S = [verts[i] for i in range(N) if not side[i]]
    else:
        side = net.source_side(s)
        S = [verts[i] for i in range(N) if side[i]]
    obj = q * _edges_within(wadj, S) - p * len(S)
    return obj, S


def _peel(wadj, alive, g):
    """Drop vertices whose degree inside ``alive`` is at most ``g``, repeatedly.

    Such a vertex never belongs to a set whose ratio beats ``g``.
    """
    alive = set(alive)
    deg = {v: sum(w for u, w in wadj[v].items() if u in alive) for v in alive}
    stack = [v for v in alive if deg[v] <= g]
    while stack:
        v = stack.pop()
        if v not in alive:
            continue
        alive.discard(v)
        for u, w in wadj[v].items():
            if u in alive:
                deg[u] -= w
                if deg[u] <= g and deg[u] + w > g:
                    stack.append(u)
    return alive


def m_density(G) -> DensityWitness:
    """``max e(H)/v(H)`` over nonempty subgraphs."""
    wadj = _wadj(G)
    total = sum(w for _, w in G.weighted_edges())
    if total == 0:
        return DensityWitness(Fraction(0), ())
    g = Fraction(total, G.n)
    W = list(range(G.n))
    alive = set(range(G.n))
    while True:
        alive = _peel(wadj, alive, g)
        if not alive:
            break
        obj, S = _best_superset(wadj, sorted(alive), (), g.numerator, g.denominator)
        if obj <= 0:
            break
        g = Fraction(_edges_within(wadj, S), len(S))
        W = S
    return DensityWitness(g, tuple(sorted(W)))


def _m1_core(wadj, verts, forced=frozenset()):
    """``max e(S)/(|S|-1)`` over ``forced <= S <= verts`` with ``|S| >= 2``.

    ``verts`` must have at least two elements. With ``forced`` empty every
    vertex is tried as an anchor; otherwise a single parametric family is
    solved.
    """
    verts = sorted(verts)
    g = Fraction(_edges_within(wadj, verts), len(verts) - 1)
    W = list(verts)
    vs = set(verts)
    if forced:
        while True:
            p, q = g.numerator, g.denominator
            obj, S = _best_superset(wadj, verts, forced, p, q)
            if obj + p <= 0:
                break
            g = Fraction(_edges_within(wadj, S), len(S) - 1)
            W = S
        # prefer the largest set attaining g
        obj, S = _best_superset(wadj, verts, forced, g.numerator, g.denominator, maximal=True)
        if len(S) >= 2 and obj + g.numerator == 0 and len(S) > len(W):
            W = S
        return g, W

    for u in verts:
        for v, w in wadj[u].items():
            if v in vs and u < v and w > g:
                g, W = Fraction(w), [u, v]
    alive = _peel(wadj, vs, g)
    order = sorted(alive, key=lambda v: (sum(w for u, w in wadj[v].items() if u in alive), v))
    for x in order:
        if x not in alive:
            continue
        while True:
            p, q = g.numerator, g.denominator
            obj, S = _best_superset(wadj, sorted(alive), {x}, p, q)
            if obj + p <= 0:
                break
            g = Fraction(_edges_within(wadj, S), len(S) - 1)
            W = S
            alive = _peel(wadj, alive, g)
            if x not in alive:
                break
        alive.discard(x)
        alive = _peel(wadj, alive, g)
        if len(alive) < 2:
            break
    return g, W


def m1_density(G) -> DensityWitness:
    """``max e(H)/(v(H)-1)`` over subgraphs with at least two vertices."""
    if G.n < 2:
        raise ParameterUndefinedError("m1 needs at least two vertices")
    g, W = _m1_core(_wadj(G), range(G.n))
    return DensityWitness(g, tuple(sorted(W)))


# -- subset tables -------------------------------------------------------------


def _subset_tables(G):
    n = G.n
    size = 1 << n
    E = np.zeros(size, dtype=np.int64)
    idx = np.arange(size, dtype=np.int64)
    wadj = _wadj(G)
    for v in range(n):
        lo = 1 << v
        add = np.zeros(lo, dtype=np.int64)
        sub = idx[:lo]
        for u, w in wadj[v].items():
            if u < v:
                add += w * ((sub >> u) & 1)
        E[lo : 2 * lo] = E[:lo] + add
    sizes = np.bitwise_count(idx.astype(np.uint64)).astype(np.int64)
    return E, sizes


def _mask_to_tuple(mask: int) -> tuple:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


def _table_max_ratio(G, min_size, num_off, den_off):
    """Exact ``max (e(S)-num_off)/(|S|-den_off)`` over ``|S| >= min_size``.

    Ties resolve to the lexicographically least sorted vertex tuple.
    """
    E, sizes = _subset_tables(G)
    best = None
    best_sizes = []
    for s in range(min_size, G.n + 1):
        sel = sizes == s
        top = int(E[sel].max())
        val = Fraction(top - num_off, s - den_off)
        if best is None or val > best:
            best, best_sizes = val, [(s, top)]
        elif val == best:
            best_sizes.append((s, top))
    cands = []
    for s, top in best_sizes:
        masks = np.nonzero((sizes == s) & (E == top))[0]
        cands.extend(_mask_to_tuple(int(m)) for m in masks)
    return best, min(cands)


def _m1k_branch_and_bound(G, k):
    wadj = _wadj(G)
    allv = frozenset(range(G.n))
    best = Fraction(_edges_within(wadj, allv), G.n - 1)
    bestW = sorted(allv)

    def visit(I, C):
        nonlocal best, bestW
        verts = I | C
        if len(verts) < k:
            return
        val, W = _m1_core(wadj, verts, I)
        if val < best:
            return
        if len(W) >= k:
            if val > best:
                best, bestW = val, sorted(W)
            return
        if val == best:
            return
        Wset = set(W)
        rest = sorted(C - Wset)
        v = max(rest, key=lambda x: (sum(wadj[x].get(y, 0) for y in Wset), -x))
        visit(I | {v}, C - {v})
        visit(I, C - {v})

    # the root is unconstrained; branch on every anchor vertex instead
    order = sorted(allv)
    for i, x in enumerate(order):
        visit(frozenset({x}), allv - set(order[: i + 1]))
    return best, tuple(bestW)


def m1k_density(G, k: int, method: str = "auto") -> DensityWitness:
    """``max e(H)/(v(H)-1)`` over subgraphs with at least ``k`` vertices.

    Returns value 0 with an empty witness when ``v(G) < k`` (flagged in
    ``convention``). ``method`` is ``"auto"``, ``"table"`` or ``"bb"``.
    """
    if k < 2:
        raise InvalidParameterError("k must be at least 2")
    if G.n < k:
        return DensityWitness(Fraction(0), (), EMPTY_RANGE)
    if k == 2 and method == "auto":
        return m1_density(G)
    if method == "auto":
        base = m1_density(G)
        if len(base.witness) >= k:
            return base
        method = "table" if G.n <= SUBSET_TABLE_LIMIT else "bb"
    if method == "table":
        if G.n > SUBSET_TABLE_LIMIT:
            raise SizeLimitError(f"subset table limited to {SUBSET_TABLE_LIMIT} vertices")
        val, W = _table_max_ratio(G, k, 0, 1)
        return DensityWitness(val, W)
    if method == "bb":
        if G.n > M1K_LIMIT:
            raise SizeLimitError(f"m1(G,k) is exact only up to {M1K_LIMIT} vertices")
        val, W = _m1k_branch_and_bound(G, k)
        return DensityWitness(val, W)
    raise InvalidParameterError(f"unknown method {method!r}")


def m2_density(F) -> DensityWitness:
    """``max (e(H)-1)/(v(H)-2)`` over subgraphs with at least three vertices."""
    if F.n < 3:
        raise ParameterUndefinedError("m2 needs at least three vertices")
    if F.n > SUBSET_TABLE_LIMIT:
        raise SizeLimitError(f"m2 is computed by enumeration up to {SUBSET_TABLE_LIMIT} vertices")
    val, W = _table_max_ratio(F, 3, 1, 2)
    return DensityWitness(val, W)


# -- bipartite degree parameter ----------------------------------------------------


def d_bipartite(F: Graph, parts) -> int:
    """``min(max degree over A, max degree over B)`` for the bipartition ``(A, B)``."""
    A, B = set(parts[0]), set(parts[1])
    if A & B or (A | B) != set(range(F.n)):
        raise InvalidBipartitionError("parts must partition the vertex set")
    for u, v in F.edges:
        if (u in A) == (v in A):
            raise InvalidBipartitionError(f"edge {u}-{v} lies inside one part")
    deg = F.degrees()
    return min(max((deg[v] for v in A), default=0), max((deg[v] for v in B), default=0))


def _components_2colored(F: Graph):
    color = [-1] * F.n
    comps = []
    for r in range(F.n):
        if color[r] >= 0:
            continue
        color[r] = 0
        comp = [r]
        stack = [r]
        while stack:
            u = stack.pop()
            for v in F.adj[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    comp.append(v)
                    stack.append(v)
                elif color[v] == color[u]:
                    return None
        comps.append(comp)
    return color, comps


def bipartition(F: Graph):
    """A bipartition ``(A, B)`` (smallest vertex of each component in ``A``), or None."""
    res = _components_2colored(F)
    if res is None:
        return None
    color, _ = res
    A = tuple(v for v in range(F.n) if color[v] == 0)
    B = tuple(v for v in range(F.n) if color[v] == 1)
    return A, B


def min_d_over_bipartitions(F: Graph, max_components: int = 16):
    """Smallest ``d(F)`` over all bipartitions (components may be flipped).

    Returns None for non-bipartite ``F``.
    """
    res = _components_2colored(F)
    if res is None:
        return None
    color, comps = res
    deg = F.degrees()
    stats = []
    for comp in comps:
        d0 = max((deg[v] for v in comp if color[v] == 0), default=0)
        d1 = max((deg[v] for v in comp if color[v] == 1), default=0)
        if d0 or d1:
            stats.append((d0, d1))
    if not stats:
        return 0
    if len(stats) > max_components:
        A, B = bipartition(F)
        return d_bipartite(F, (A, B))
    best = None
    for mask in range(1 << (len(stats) - 1)):
        a = b = 0
        for i, (d0, d1) in enumerate(stats):
            if mask >> i & 1:
                d0, d1 = d1, d0
            a, b = max(a, d0), max(b, d1)
        best = min(a, b) if best is None else min(best, a, b)
    return best


def max_min_degree(F) -> int:
    """``max over subgraphs H of delta(H)``, i.e. the degeneracy."""
    return degeneracy_order(F)[1]


# -- chromatic and clique numbers -----------------------------------------------------


def chromatic_number(F: Graph, limit: int = 16) -> int:
    if F.n > limit:
        raise SizeLimitError(f"chromatic number is exact only up to {limit} vertices")
    if F.n == 0:
        return 0
    if F.num_edges == 0:
        return 1
    adj = F.adj
    order = sorted(range(F.n), key=lambda v: (-len(adj[v]), v))

    def colorable(k):
        col = [-1] * F.n

        def place(i, used):
            if i == len(order):
                return True
            v = order[i]
            taken = {col[u] for u in adj[v]}
            for c in range(min(used + 1, k)):
                if c not in taken:
                    col[v] = c
                    if place(i + 1, max(used, c + 1)):
                        return True
            col[v] = -1
            return False

        return place(0, 0)

    k = max(2, clique_number(F, limit=max(limit, 20)))
    while not colorable(k):
        k += 1
    return k


def clique_number(F: Graph, limit: int = 20) -> int:
    if F.n > limit:
        raise SizeLimitError(f"clique number is exact only up to {limit} vertices")
    nb = [0] * F.n
    for u, v in F.edges:
        nb[u] |= 1 << v
        nb[v] |= 1 << u
    best = 0

    def expand(size, P, X):
        nonlocal best
        if not P and not X:
            best = max(best, size)
            return
        if size + bin(P).count("1") <= best:
            return
        pivot_src = P | X
        u = pivot_src.bit_length() - 1
        cand = P & ~nb[u]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(size + 1, P & nb[v], X & nb[v])
            P &= ~low
            X |= low
            cand &= ~low

    expand(0, (1 << F.n) - 1, 0)
    return best
