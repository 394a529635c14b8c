"""Graph and multigraph types, named generators, contraction and edge-list I/O.

Vertices are the integers ``0..n-1``. Every operation that renumbers vertices
returns the map it used, so certificates computed on a derived graph can be
pulled back to the host graph.
"""

from __future__ import annotations

import heapq
import random
from collections import Counter
from itertools import combinations
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InvalidFamilyError, InvalidParameterError

__all__ = [
    "Graph",
    "MultiGraph",
    "build_named",
    "complete_graph",
    "complete_bipartite_graph",
    "path_graph",
    "cycle_graph",
    "star_graph",
    "p3_witness",
    "disjoint_union",
    "induced_subgraph",
    "contract_family",
    "degeneracy_order",
    "random_gnp",
    "parse_edgelist",
    "format_edgelist",
    "read_edgelist",
    "write_edgelist",
    "format_multigraph",
]


def _norm(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph on vertices ``0..n-1``.

    ``edges`` is kept as a sorted tuple of pairs ``(u, v)`` with ``u < v``; the
    position of an edge in that tuple is its index everywhere else in the
    package (colorings, forest partitions).
    """

    __slots__ = ("n", "edges", "_adj", "_index")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise InvalidParameterError("vertex count must be non-negative")
        seen = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise InvalidParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge {u}-{v} out of range for n={n}")
            p = _norm(u, v)
            if p in seen:
                raise InvalidParameterError(f"parallel edge {p[0]}-{p[1]}")
            seen.add(p)
        self.n = n
        self.edges = tuple(sorted(seen))
        self._adj = None
        self._index = None

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def adj(self) -> tuple[tuple[int, ...], ...]:
        if self._adj is None:
            nbrs = [[] for _ in range(self.n)]
            for u, v in self.edges:
                nbrs[u].append(v)
                nbrs[v].append(u)
            self._adj = tuple(tuple(sorted(a)) for a in nbrs)
        return self._adj

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(a) for a in self.adj]

    def edge_index(self, u: int, v: int) -> int:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.edges)}
        return self._index[_norm(u, v)]

    def has_edge(self, u: int, v: int) -> bool:
        if self._index is None:
            self._index = {e: i for i, e in enumerate(self.edges)}
        return _norm(u, v) in self._index

    def weighted_edges(self):
        return [(e, 1) for e in self.edges]

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self):
        return hash((self.n, self.edges))

    def __repr__(self):
        return f"Graph(n={self.n}, e={len(self.edges)})"


class MultiGraph:
    """Loopless multigraph; parallel edges are stored as a multiplicity per pair."""

    __slots__ = ("n", "mult")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = (), mult=None):
        counts: Counter = Counter()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            counts[_norm(u, v)] += 1
        if mult:
            for (u, v), c in dict(mult).items():
                counts[_norm(u, v)] += int(c)
        for (u, v), c in counts.items():
            if u == v:
                raise InvalidParameterError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidParameterError(f"edge {u}-{v} out of range for n={n}")
            if c < 0:
                raise InvalidParameterError("negative multiplicity")
        self.n = n
        self.mult = {p: c for p, c in sorted(counts.items()) if c > 0}

    @classmethod
    def from_graph(cls, G: Graph) -> "MultiGraph":
        return cls(G.n, G.edges)

    @property
    def num_edges(self) -> int:
        return sum(self.mult.values())

    def edge_list(self) -> list[tuple[int, int]]:
        """All edges with repetition, sorted."""
        out = []
        for p, c in self.mult.items():
            out.extend([p] * c)
        return out

    def weighted_edges(self):
        return list(self.mult.items())

    def multiplicity(self, u: int, v: int) -> int:
        return self.mult.get(_norm(u, v), 0)

    def degree(self, v: int) -> int:
        return sum(c for (a, b), c in self.mult.items() if v in (a, b))

    def underlying(self) -> Graph:
        return Graph(self.n, self.mult.keys())

    def __eq__(self, other):
        return isinstance(other, MultiGraph) and self.n == other.n and self.mult == other.mult

    def __repr__(self):
        return f"MultiGraph(n={self.n}, e={self.num_edges})"


# -- generators --------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    return Graph(n, combinations(range(n), 2))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """``K_{a,b}`` with parts ``0..a-1`` and ``a..a+b-1``."""
    return Graph(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def path_graph(length: int) -> Graph:
    """Path with ``length`` edges (and ``length + 1`` vertices)."""
    return Graph(length + 1, ((i, i + 1) for i in range(length)))


def cycle_graph(length: int) -> Graph:
    if length < 3:
        raise InvalidParameterError("cycle length must be at least 3")
    return Graph(length, [(i, (i + 1) % length) for i in range(length)])


def star_graph(rays: int) -> Graph:
    """Star with center 0 and ``rays`` leaves."""
    return Graph(rays + 1, ((0, i) for i in range(1, rays + 1)))


_NAMED = {
    "complete": (complete_graph, 1),
    "complete-bipartite": (complete_bipartite_graph, 2),
    "path": (path_graph, 1),
    "cycle": (cycle_graph, 1),
    "star": (star_graph, 1),
}


def build_named(family: str, *params: int) -> Graph:
    """Build ``complete l``, ``complete-bipartite a b``, ``path l``, ``cycle l`` or ``star l``."""
    try:
        fn, arity = _NAMED[family]
    except KeyError:
        raise InvalidParameterError(f"unknown graph family {family!r}") from None
    if len(params) != arity:
        raise InvalidParameterError(f"{family} takes {arity} parameter(s)")
    if any(int(p) < 1 for p in params):
        raise InvalidParameterError("parameters must be positive")
    return fn(*(int(p) for p in params))


def p3_witness() -> Graph:
    """5-cycle on 0..4 with a pendant edge ``{i, i+5}`` at every cycle vertex."""
    edges = [(i, (i + 1) % 5) for i in range(5)] + [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for G in graphs:
        edges.extend((u + offset, v + offset) for u, v in G.edges)
        offset += G.n
    return Graph(offset, edges)


def random_gnp(n: int, p: float, seed=None) -> Graph:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return Graph(n, [e for e in combinations(range(n), 2) if rng.random() < p])


# -- structural operations ----------------------------------------------------


def induced_subgraph(G: Graph, S: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``S``; vertices renumbered in increasing order.

    Returns the subgraph and the map ``old id -> new id``.
    """
    verts = sorted(set(S))
    relabel = {v: i for i, v in enumerate(verts)}
    edges = [(relabel[u], relabel[v]) for u, v in G.edges if u in relabel and v in relabel]
    return Graph(len(verts), edges), relabel


def contract_family(G, family: Sequence[Iterable[int]]) -> tuple[MultiGraph, list[int]]:
    """Contract every vertex set of ``family`` into a single vertex.

    Works on a :class:`Graph` or :class:`MultiGraph`. Edges inside a set are
    dropped, every other edge survives with its multiplicity. Contracted
    vertices come first (in family order), followed by the untouched vertices
    in increasing order. Returns the multigraph and ``vmap`` with
    ``vmap[v]`` the image of original vertex ``v``.
    """
    vmap = [-1] * G.n
    sets = [sorted(set(S)) for S in family]
    for i, S in enumerate(sets):
        if not S:
            raise InvalidFamilyError("empty set in vertex family")
        for v in S:
            if not 0 <= v < G.n:
                raise InvalidFamilyError(f"vertex {v} not in graph")
            if vmap[v] != -1:
                raise InvalidFamilyError(f"vertex {v} lies in two family members")
            vmap[v] = i
    nxt = len(sets)
    for v in range(G.n):
        if vmap[v] == -1:
            vmap[v] = nxt
            nxt += 1
    counts: Counter = Counter()
    for (u, v), w in G.weighted_edges():
        a, b = vmap[u], vmap[v]
        if a != b:
            counts[_norm(a, b)] += w
    return MultiGraph(nxt, mult=counts), vmap


def degeneracy_order(G) -> tuple[list[int], int]:
    """Smallest-last ordering by repeated removal of a minimum-degree vertex.

    Ties go to the smallest vertex id. The returned order ``v_1..v_n`` has the
    property that each ``v_i`` has at most ``degeneracy`` neighbours among
    ``v_1..v_{i-1}``. Multiplicities count towards degree on multigraphs.
    """
    n = G.n
    deg = [0] * n
    nbrs: list[dict[int, int]] = [dict() for _ in range(n)]
    for (u, v), w in G.weighted_edges():
        deg[u] += w
        deg[v] += w
        nbrs[u][v] = nbrs[u].get(v, 0) + w
        nbrs[v][u] = nbrs[v].get(u, 0) + w
    heap = [(deg[v], v) for v in range(n)]
    heapq.heapify(heap)
    removed = [False] * n
    peeled = []
    degeneracy = 0
    while heap:
        d, v = heapq.heappop(heap)
        if removed[v] or d != deg[v]:
            continue
        removed[v] = True
        peeled.append(v)
        degeneracy = max(degeneracy, d)
        for u, w in nbrs[v].items():
            if not removed[u]:
                deg[u] -= w
                heapq.heappush(heap, (deg[u], u))
    peeled.reverse()
    return peeled, degeneracy


# -- edge-list text format ----------------------------------------------------


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_edgelist(text: str) -> Graph:
    """Parse the ``n e`` / ``u v`` edge-list format."""
    lines = list(_content_lines(text))
    if not lines:
        raise ValueError("empty edge-list file")
    lineno, header = lines[0]
    try:
        n, e = (int(t) for t in header.split())
    except ValueError:
        raise ValueError(f"line {lineno}: expected header 'n e'") from None
    body = lines[1:]
    if len(body) != e:
        raise ValueError(f"header announces {e} edges, found {len(body)}")
    edges = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v'")
        u, v = int(parts[0]), int(parts[1])
        if not 0 <= u < v < n:
            raise ValueError(f"line {lineno}: need 0 <= u < v < n")
        edges.append((u, v))
    return Graph(n, edges)


def format_edgelist(G: Graph) -> str:
    lines = [f"{G.n} {G.num_edges}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def read_edgelist(path) -> Graph:
    return parse_edgelist(Path(path).read_text())


def write_edgelist(G: Graph, path) -> None:
    Path(path).write_text(format_edgelist(G))


def format_multigraph(M: MultiGraph) -> str:
    """``n e`` header (distinct pairs), then ``u v mult`` lines."""
    lines = [f"{M.n} {len(M.mult)}"]
    lines.extend(f"{u} {v} {c}" for (u, v), c in M.mult.items())
    return "\n".join(lines) + "\n"
