"""Forbidden-pattern descriptions and monochromatic-copy detectors.

Paths and stars are measured in edges: ``path 3`` is the path with three
edges, ``star 5`` is ``K_{1,5}``. Detectors work on a plain adjacency list of
sets (one color class) and return the vertices of a copy or ``None``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from pathlib import Path

from .errors import InvalidParameterError, SizeLimitError
from .graph import (
    Graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    read_edgelist,
    star_graph,
)

__all__ = ["PatternSpec", "parse_pattern", "find_copy", "find_copy_through", "EXPLICIT_LIMIT"]

EXPLICIT_LIMIT = 10
KINDS = ("path", "cycle", "clique", "biclique", "star", "explicit")


@dataclass(frozen=True)
class PatternSpec:
    kind: str
    params: tuple = ()
    graph: Graph | None = None

    def __post_init__(self):
        k, p = self.kind, self.params
        if k not in KINDS:
            raise InvalidParameterError(f"unknown pattern kind {k!r}")
        if k == "explicit":
            if self.graph is None:
                raise InvalidParameterError("explicit pattern needs a graph")
            if self.graph.n > EXPLICIT_LIMIT:
                raise SizeLimitError(f"explicit patterns are limited to {EXPLICIT_LIMIT} vertices")
            if self.graph.num_edges == 0:
                raise InvalidParameterError("explicit pattern has no edges")
            return
        want = 2 if k == "biclique" else 1
        if len(p) != want or any(not isinstance(x, int) for x in p):
            raise InvalidParameterError(f"{k} takes {want} integer parameter(s)")
        lo = {"path": 1, "cycle": 3, "clique": 2, "biclique": 1, "star": 1}[k]
        if min(p) < lo:
            raise InvalidParameterError(f"{k} parameter must be at least {lo}")

    @classmethod
    def path(cls, length):
        return cls("path", (length,))

    @classmethod
    def cycle(cls, length):
        return cls("cycle", (length,))

    @classmethod
    def clique(cls, size):
        return cls("clique", (size,))

    @classmethod
    def biclique(cls, a, b):
        return cls("biclique", (a, b))

    @classmethod
    def star(cls, rays):
        return cls("star", (rays,))

    @classmethod
    def explicit(cls, F: Graph):
        return cls("explicit", (), F)

    def to_graph(self) -> Graph:
        k, p = self.kind, self.params
        if k == "explicit":
            return self.graph
        if k == "path":
            return path_graph(p[0])
        if k == "cycle":
            return cycle_graph(p[0])
        if k == "clique":
            return complete_graph(p[0])
        if k == "biclique":
            return complete_bipartite_graph(*p)
        return star_graph(p[0])

    @property
    def num_edges(self) -> int:
        return self.to_graph().num_edges

    def __str__(self):
        if self.kind == "explicit":
            return f"explicit({self.graph.n} vertices, {self.graph.num_edges} edges)"
        return f"{self.kind}:{','.join(map(str, self.params))}"


def parse_pattern(text: str) -> PatternSpec:
    """Parse ``path:L | cycle:L | clique:L | biclique:A,B | star:L | file:PATH``."""
    kind, sep, rest = text.partition(":")
    if not sep:
        raise InvalidParameterError(f"bad pattern {text!r}")
    kind = kind.strip()
    if kind == "file":
        return PatternSpec.explicit(read_edgelist(Path(rest.strip())))
    try:
        params = tuple(int(x) for x in rest.split(","))
    except ValueError:
        raise InvalidParameterError(f"bad pattern parameters in {text!r}") from None
    return PatternSpec(kind, params)


# -- whole-graph search ------------------------------------------------------------


def _path_from(adj, path, on, need):
    if need == 0:
        return list(path)
    for y in adj[path[-1]]:
        if y not in on:
            path.append(y)
            on.add(y)
            found = _path_from(adj, path, on, need - 1)
            if found:
                return found
            path.pop()
            on.discard(y)
    return None


def _find_path(adj, length):
    for v in range(len(adj)):
        if adj[v]:
            found = _path_from(adj, [v], {v}, length)
            if found:
                return found
    return None


def _cycle_closing(adj, start, path, on, need, floor):
    # need: edges still to add before returning to start
    x = path[-1]
    if need == 1:
        return list(path) if start in adj[x] else None
    for y in adj[x]:
        if y > floor and y not in on:
            path.append(y)
            on.add(y)
            found = _cycle_closing(adj, start, path, on, need - 1, floor)
            if found:
                return found
            path.pop()
            on.discard(y)
    return None


def _find_cycle(adj, length):
    for v in range(len(adj)):
        if len(adj[v]) >= 2:
            found = _cycle_closing(adj, v, [v], {v}, length, v)
            if found:
                return found
    return None


def _clique_in(adj, cand, size, chosen):
    if size == 0:
        return list(chosen)
    cand = sorted(cand)
    for i, v in enumerate(cand):
        if len(cand) - i < size:
            break
        rest = {u for u in cand[i + 1 :] if u in adj[v]}
        chosen.append(v)
        found = _clique_in(adj, rest, size - 1, chosen)
        if found:
            return found
        chosen.pop()
    return None


def _find_clique(adj, size):
    if size == 1:
        return [0] if adj else None
    eligible = {v for v in range(len(adj)) if len(adj[v]) >= size - 1}
    return _clique_in(adj, eligible, size, [])


def _biclique_with(adj, A, common, a, b, pool):
    """Extend side ``A`` to ``a`` vertices keeping ``>= b`` common neighbours."""
    if len(A) == a:
        return list(A) + sorted(common)[:b]
    for v in pool:
        if v in A or v <= A[-1]:
            continue
        nc = common & adj[v]
        if len(nc) >= b:
            A.append(v)
            found = _biclique_with(adj, A, nc, a, b, pool)
            if found:
                return found
            A.pop()
    return None


def _find_biclique(adj, a, b):
    for x, y in ((a, b), (b, a)):
        for v in range(len(adj)):
            if len(adj[v]) < y:
                continue
            pool = sorted({w for u in adj[v] for w in adj[u] if len(adj[w]) >= y})
            found = _biclique_with(adj, [v], set(adj[v]), x, y, pool)
            if found:
                return found
    return None


def _find_star(adj, rays):
    for v in range(len(adj)):
        if len(adj[v]) >= rays:
            return [v] + sorted(adj[v])[:rays]
    return None


def _embed(fadj, adj, order, mapping, used):
    i = len(mapping)
    if i == len(order):
        return dict(mapping)
    x = order[i]
    placed = [mapping[y] for y in fadj[x] if y in mapping]
    if placed:
        cands = set(adj[placed[0]])
        for p in placed[1:]:
            cands &= adj[p]
    else:
        cands = range(len(adj))
    for v in sorted(cands):
        if v in used or len(adj[v]) < len(fadj[x]):
            continue
        mapping[x] = v
        used.add(v)
        found = _embed(fadj, adj, order, mapping, used)
        if found:
            return found
        del mapping[x]
        used.discard(v)
    return None


def _embed_order(F: Graph, first=None):
    """Vertices of ``F`` so that each one after the first of its component touches an earlier one."""
    order = []
    seen = set()
    starts = ([first] if first is not None else []) + sorted(range(F.n), key=lambda v: -F.degree(v))
    for s in starts:
        if s in seen:
            continue
        stack = [s]
        seen.add(s)
        while stack:
            x = stack.pop(0)
            order.append(x)
            for y in sorted(F.neighbors(x), key=lambda v: -F.degree(v)):
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
    return order


def _find_explicit(adj, F: Graph):
    F = _drop_isolated(F)
    fadj = [set(F.neighbors(x)) for x in range(F.n)]
    found = _embed(fadj, adj, _embed_order(F), {}, set())
    return None if found is None else [found[x] for x in range(F.n)]


def _drop_isolated(F: Graph) -> Graph:
    keep = [v for v in range(F.n) if F.degree(v)]
    if len(keep) == F.n:
        return F
    relabel = {v: i for i, v in enumerate(keep)}
    return Graph(len(keep), [(relabel[u], relabel[v]) for u, v in F.edges])


def find_copy(adj, F: PatternSpec):
    """Vertices of a copy of ``F`` in the graph given by adjacency sets, or ``None``."""
    k, p = F.kind, F.params
    if k == "path":
        return _find_path(adj, p[0])
    if k == "cycle":
        return _find_cycle(adj, p[0])
    if k == "clique":
        return _find_clique(adj, p[0])
    if k == "biclique":
        return _find_biclique(adj, *p)
    if k == "star":
        return _find_star(adj, p[0])
    return _find_explicit(adj, F.graph)


# -- copies through a given edge ---------------------------------------------------


def _path_through(adj, path, on, length, grow_tail):
    if len(path) - 1 == length:
        return list(path)
    if grow_tail:
        # finish the tail here and grow the head instead
        found = _path_through(adj, path, on, length, False)
        if found:
            return found
        end = path[-1]
    else:
        end = path[0]
    for y in adj[end]:
        if y in on:
            continue
        on.add(y)
        if grow_tail:
            path.append(y)
        else:
            path.insert(0, y)
        found = _path_through(adj, path, on, length, grow_tail)
        if found:
            return found
        if grow_tail:
            path.pop()
        else:
            path.pop(0)
        on.discard(y)
    return None


def _cycle_through(adj, u, v, length):
    # path v -> ... -> u with length-1 edges
    path = [v]
    on = {u, v}

    def walk(need):
        x = path[-1]
        if need == 1:
            return u in adj[x]
        for y in adj[x]:
            if y not in on:
                path.append(y)
                on.add(y)
                if walk(need - 1):
                    return True
                path.pop()
                on.discard(y)
        return False

    return [u] + path if walk(length - 1) else None


def _biclique_through(adj, u, v, a, b):
    # u on the a-side, v on the b-side
    others = sorted(adj[v] - {u})
    for rest in combinations(others, a - 1):
        common = set(adj[u])
        for x in rest:
            common &= adj[x]
            if len(common) < b:
                break
        if len(common) >= b:
            B = [v] + sorted(common - {v})[: b - 1]
            return [u, *rest] + B
    return None


def find_copy_through(adj, u, v, F: PatternSpec):
    """A copy of ``F`` using the edge ``uv`` (which must be present in ``adj``)."""
    k, p = F.kind, F.params
    if k == "path":
        return _path_through(adj, [u, v], {u, v}, p[0], True)
    if k == "cycle":
        return _cycle_through(adj, u, v, p[0])
    if k == "clique":
        if p[0] == 2:
            return [u, v]
        found = _clique_in(adj, adj[u] & adj[v], p[0] - 2, [])
        return None if found is None else sorted([u, v, *found])
    if k == "biclique":
        a, b = p
        for x, y in ((u, v), (v, u)):
            found = _biclique_through(adj, x, y, a, b)
            if found:
                return found
            if a != b:
                found = _biclique_through(adj, x, y, b, a)
                if found:
                    return found
        return None
    if k == "star":
        for c in (u, v):
            if len(adj[c]) >= p[0]:
                other = v if c == u else u
                return [c, other] + sorted(adj[c] - {other})[: p[0] - 1]
        return None
    F = _drop_isolated(F.graph)
    fadj = [set(F.neighbors(x)) for x in range(F.n)]
    for x, y in F.edges:
        for s, t in ((x, y), (y, x)):
            if len(adj[u]) < len(fadj[s]) or len(adj[v]) < len(fadj[t]):
                continue
            order = _embed_order(F, s)
            order.remove(t)
            order.insert(1, t)
            found = _embed(fadj, adj, order, {s: u, t: v}, {u, v})
            if found:
                return [found[z] for z in range(F.n)]
    return None
