"""Forest partitions, star-forest splits, acyclic orientations and ``a_d``.

Edges of a host are addressed by index: ``G.edges`` for a :class:`Graph`,
``M.edge_list()`` (pairs repeated by multiplicity) for a :class:`MultiGraph`.
"""

from __future__ import annotations

import heapq
import math
from collections import deque
from dataclasses import dataclass

from .errors import InfeasibleError, NotAForestError, SizeLimitError
from .graph import Graph, MultiGraph
from .parameters import m1_density

__all__ = [
    "INFINITY",
    "ForestPartition",
    "Orientation",
    "host_edges",
    "nash_williams",
    "split_into_star_forests",
    "acyclic_orient",
    "orient_by_order",
    "a_d_exact",
]

INFINITY = math.inf


def host_edges(G) -> list[tuple[int, int]]:
    if isinstance(G, MultiGraph):
        return G.edge_list()
    return list(G.edges)


@dataclass(frozen=True)
class ForestPartition:
    """``classes[i]`` lists the edge indices (into ``host_edges(host)``) of forest ``i``."""

    host: object
    classes: tuple

    def edge_classes(self) -> list[list[tuple[int, int]]]:
        ends = host_edges(self.host)
        return [[ends[i] for i in cls] for cls in self.classes]

    def check(self) -> None:
        ends = host_edges(self.host)
        seen = sorted(i for cls in self.classes for i in cls)
        if seen != list(range(len(ends))):
            raise AssertionError("classes do not partition the edge set")
        for cls in self.classes:
            if not _is_forest(self.host.n, [ends[i] for i in cls]):
                raise AssertionError("class is not a forest")


@dataclass(frozen=True)
class Orientation:
    """``arcs[i] = (tail, head)`` orients edge ``i``; all arcs point forward in ``order``."""

    host: object
    arcs: tuple
    order: tuple
    max_indegree: int

    def indegrees(self) -> list[int]:
        deg = [0] * self.host.n
        for _, h in self.arcs:
            deg[h] += 1
        return deg

    def check(self) -> None:
        pos = {v: i for i, v in enumerate(self.order)}
        if sorted(pos) != list(range(self.host.n)):
            raise AssertionError("order is not a permutation of the vertices")
        ends = host_edges(self.host)
        for (a, b), (t, h) in zip(ends, self.arcs):
            if {a, b} != {t, h}:
                raise AssertionError("arc does not match its edge")
            if pos[t] >= pos[h]:
                raise AssertionError("arc points backwards in the order")
        if len(ends) != len(self.arcs):
            raise AssertionError("not every edge is oriented")
        if max(self.indegrees(), default=0) != self.max_indegree:
            raise AssertionError("recorded in-degree is wrong")


def _is_forest(n, edges) -> bool:
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        a, b = find(u), find(v)
        if a == b:
            return False
        parent[a] = b
    return True


# -- Nash-Williams forest partition (matroid union) -----------------------------


def _root_forest(fadj):
    """Parent arc, depth and root of every vertex of a forest."""
    n = len(fadj)
    parent = [None] * n
    depth = [0] * n
    root = [-1] * n
    for r in range(n):
        if root[r] >= 0:
            continue
        root[r] = r
        q = deque([r])
        while q:
            x = q.popleft()
            for y, eid in fadj[x].items():
                if root[y] < 0:
                    root[y] = r
                    depth[y] = depth[x] + 1
                    parent[y] = (x, eid)
                    q.append(y)
    return parent, depth, root


def _forest_path(info, u, v):
    """Edge ids on the ``u``-``v`` path of a rooted forest, or None if disconnected."""
    parent, depth, root = info
    if root[u] != root[v]:
        return None
    left, right = [], []
    while depth[u] > depth[v]:
        u, eid = parent[u]
        left.append(eid)
    while depth[v] > depth[u]:
        v, eid = parent[v]
        right.append(eid)
    while u != v:
        u, eid = parent[u]
        left.append(eid)
        v, eid = parent[v]
        right.append(eid)
    return left + right[::-1]


def nash_williams(G) -> ForestPartition:
    """Partition the edges into the minimum number of forests.

    Edges are inserted one at a time; each insertion searches a shortest
    exchange sequence across the current forests (matroid partitioning) and
    opens a new forest only when none exists, so the class count equals the
    arboricity ``ceil(m1(G))``.
    """
    ends = host_edges(G)
    forests: list[list[dict]] = []
    owner = [None] * len(ends)

    def attach(eid, i):
        a, b = ends[eid]
        forests[i][a][b] = eid
        forests[i][b][a] = eid
        owner[eid] = i

    def detach(eid):
        a, b = ends[eid]
        i = owner[eid]
        del forests[i][a][b]
        del forests[i][b][a]
        owner[eid] = None

    # union-find per forest; dropped (None) whenever that forest loses an edge
    dsu: list = []

    def find(par, x):
        while par[x] != x:
            par[x] = par[par[x]]
            x = par[x]
        return x

    def rebuilt(i):
        par = list(range(G.n))
        for x in range(G.n):
            for y in forests[i][x]:
                par[find(par, x)] = find(par, y)
        return par

    for e in range(len(ends)):
        a, b = ends[e]
        placed = False
        for i in range(len(forests)):
            if dsu[i] is None:
                dsu[i] = rebuilt(i)
            ra, rb = find(dsu[i], a), find(dsu[i], b)
            if ra != rb:
                attach(e, i)
                dsu[i][ra] = rb
                placed = True
                break
        if placed:
            continue
        label = {e: None}
        queue = deque([e])
        info = [None] * len(forests)
        done = False
        while queue and not done:
            f = queue.popleft()
            a, b = ends[f]
            for i in range(len(forests)):
                if owner[f] == i:
                    continue
                if info[i] is None:
                    info[i] = _root_forest(forests[i])
                path = _forest_path(info[i], a, b)
                if path is None:
                    cur, target = f, i
                    while True:
                        if owner[cur] is not None:
                            dsu[owner[cur]] = None
                            detach(cur)
                        dsu[target] = None
                        attach(cur, target)
                        lab = label[cur]
                        if lab is None:
                            break
                        cur, target = lab
                    done = True
                    break
                for g in path:
                    if g not in label:
                        label[g] = (f, i)
                        queue.append(g)
        if not done:
            forests.append([dict() for _ in range(G.n)])
            dsu.append(None)
            attach(e, len(forests) - 1)

    classes = [[] for _ in forests]
    for eid, i in enumerate(owner):
        classes[i].append(eid)
    return ForestPartition(G, tuple(tuple(c) for c in classes))


# -- star forests -------------------------------------------------------------------


def split_into_star_forests(edges, n=None):
    """Split a forest into two star forests.

    Each tree is rooted at its smallest vertex; an edge goes to class 0 when
    its upper endpoint has even depth and to class 1 otherwise. Returns two
    lists of edges (input order preserved).
    """
    edges = [tuple(e) for e in edges]
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    if not _is_forest(n, edges):
        raise NotAForestError("input edge set contains a cycle")
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    depth = [-1] * n
    for r in range(n):
        if depth[r] >= 0:
            continue
        depth[r] = 0
        q = deque([r])
        while q:
            x = q.popleft()
            for y in adj[x]:
                if depth[y] < 0:
                    depth[y] = depth[x] + 1
                    q.append(y)
    out = ([], [])
    for u, v in edges:
        upper = u if depth[u] < depth[v] else v
        out[depth[upper] % 2].append((u, v))
    return out


# -- orientations -------------------------------------------------------------------


def orient_by_order(G, order) -> Orientation:
    """Orient every edge from the earlier to the later endpoint of ``order``."""
    pos = {v: i for i, v in enumerate(order)}
    arcs = tuple((a, b) if pos[a] < pos[b] else (b, a) for a, b in host_edges(G))
    deg = [0] * G.n
    for _, h in arcs:
        deg[h] += 1
    return Orientation(G, arcs, tuple(order), max(deg, default=0))


def acyclic_orient(G, k: int) -> Orientation:
    """Acyclic orientation with every in-degree at most ``k``.

    Vertices of current degree at most ``k`` are peeled (smallest id first);
    each peeled vertex receives its remaining edges as in-arcs and the reverse
    peeling order is the topological order. When peeling gets stuck the
    remaining subgraph has minimum degree above ``k``, so no acyclic
    orientation of in-degree at most ``k`` exists (its topologically last
    vertex would collect all its edges). The raised :class:`InfeasibleError`
    carries that subgraph, or the densest ``m1`` witness when ``m1(G) > k``.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    ends = host_edges(G)
    inc = [[] for _ in range(G.n)]
    for eid, (a, b) in enumerate(ends):
        inc[a].append(eid)
        inc[b].append(eid)
    deg = [len(x) for x in inc]
    heap = [v for v in range(G.n) if deg[v] <= k]
    heapq.heapify(heap)
    queued = [deg[v] <= k for v in range(G.n)]
    removed = [False] * G.n
    arcs = [None] * len(ends)
    peeled = []
    while heap:
        v = heapq.heappop(heap)
        removed[v] = True
        peeled.append(v)
        for eid in inc[v]:
            if arcs[eid] is not None:
                continue
            a, b = ends[eid]
            u = b if a == v else a
            arcs[eid] = (u, v)
            deg[u] -= 1
            if not queued[u] and deg[u] <= k:
                queued[u] = True
                heapq.heappush(heap, u)
    if len(peeled) < G.n:
        core = tuple(v for v in range(G.n) if not removed[v])
        m1 = m1_density(G)
        if m1.value > k:
            raise InfeasibleError(f"m1(G) = {m1.value} exceeds {k}", m1.witness, m1.value)
        raise InfeasibleError(
            f"subgraph of minimum degree > {k} admits no acyclic in-degree-{k} orientation",
            core,
            m1.value,
        )
    order = tuple(reversed(peeled))
    deg_in = [0] * G.n
    for _, h in arcs:
        deg_in[h] += 1
    return Orientation(G, tuple(arcs), order, max(deg_in, default=0))


# -- diameter-bounded forest partitions ---------------------------------------


def _bfs_order_edges(G: Graph):
    seen = [False] * G.n
    order = []
    used = set()
    for r in range(G.n):
        if seen[r]:
            continue
        seen[r] = True
        q = deque([r])
        while q:
            x = q.popleft()
            for y in G.adj[x]:
                e = (x, y) if x < y else (y, x)
                if e not in used:
                    used.add(e)
                    order.append(G.edge_index(*e))
                if not seen[y]:
                    seen[y] = True
                    q.append(y)
    return order


def _tree_diameter(adj, start):
    def far(s):
        dist = {s: 0}
        q = deque([s])
        last = s
        while q:
            x = q.popleft()
            last = x
            for y in adj[x]:
                if y not in dist:
                    dist[y] = dist[x] + 1
                    q.append(y)
        return last, dist[last]

    a, _ = far(start)
    return far(a)[1]


def a_d_exact(G: Graph, d, max_vertices: int = 10, max_edges: int = 15) -> int:
    """Minimum number of forests with all tree diameters at most ``d``.

    ``d = INFINITY`` gives the arboricity ``ceil(m1(G))``. Finite ``d`` is
    solved by exhaustive search (classes are interchangeable, so a new class
    is only opened after all earlier ones are in use).
    """
    if d != INFINITY and d < 2:
        raise ValueError("d must be at least 2")
    if G.num_edges == 0:
        return 0
    if d == INFINITY:
        return len(nash_williams(G).classes)
    if G.n > max_vertices or G.num_edges > max_edges:
        raise SizeLimitError(
            f"a_d is exhaustive only up to {max_vertices} vertices and {max_edges} edges"
        )
    arb = len(nash_williams(G).classes)
    order = _bfs_order_edges(G)
    ends = G.edges
    total = len(order)

    def feasible(c):
        adjs = [[set() for _ in range(G.n)] for _ in range(c)]
        comp = [list(range(G.n)) for _ in range(c)]
        sizes = [0] * c

        def root(cls, x):
            while comp[cls][x] != x:
                x = comp[cls][x]
            return x

        def place(i, used):
            if i == total:
                return True
            # a forest on n vertices holds at most n-1 edges
            if sum(G.n - 1 - sizes[j] for j in range(c)) < total - i:
                return False
            u, v = ends[order[i]]
            for cls in range(min(used + 1, c)):
                ru, rv = root(cls, u), root(cls, v)
                if ru == rv:
                    continue
                adjs[cls][u].add(v)
                adjs[cls][v].add(u)
                if _tree_diameter(adjs[cls], u) <= d:
                    comp[cls][ru] = rv
                    sizes[cls] += 1
                    if place(i + 1, max(used, cls + 1)):
                        return True
                    sizes[cls] -= 1
                    comp[cls][ru] = ru
                adjs[cls][u].discard(v)
                adjs[cls][v].discard(u)
            return False

        return place(0, 0)

    for c in range(arb, 2 * arb + 1):
        if feasible(c):
            return c
    raise AssertionError("no partition within twice the arboricity")
