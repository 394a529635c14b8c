"""Edge colorings: monochromatic copies, exhaustive Ramsey search and the
coloring engines that avoid a monochromatic pattern on sparse graphs.

The three partition engines share one pipeline. Dense pieces are contracted,
each piece is colored by exhaustive search (it is smaller than the relevant
Ramsey number), the contracted multigraph is split into forests, and the
forests are pulled back onto the original edges. Every engine re-checks its
output with the detector before returning it.
"""

from __future__ import annotations

import sys
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from pathlib import Path

from .contract import contract_dense, pull_back_edges
from .decompose import nash_williams, split_into_star_forests
from .errors import (
    BudgetExhaustedError,
    CertificateError,
    InvalidParameterError,
    NotFoundError,
    PreconditionError,
    SizeLimitError,
)
from .graph import Graph, degeneracy_order, induced_subgraph
from .parameters import m1_density, m1k_density, m_density
from .patterns import PatternSpec, find_copy, find_copy_through

__all__ = [
    "EdgeColoring",
    "RamseyVerdict",
    "find_mono_copy",
    "is_ramsey",
    "greedy_backdegree_coloring",
    "ffree_coloring_small",
    "cycle_free_partition",
    "biclique_free_partition",
    "path_free_partition",
    "extract_star_coloring",
    "is_star_coloring",
    "format_coloring",
    "parse_coloring",
    "read_coloring",
    "write_coloring",
    "DEFAULT_BUDGET",
    "SMALL_EDGE_LIMIT",
]

DEFAULT_BUDGET = 10**9
SMALL_EDGE_LIMIT = 28


@dataclass(frozen=True)
class EdgeColoring:
    """``colors[i]`` is the color of ``host.edges[i]``, a value in ``0..r-1``."""

    host: Graph
    r: int
    colors: tuple

    def __post_init__(self):
        if len(self.colors) != self.host.num_edges:
            raise InvalidParameterError("coloring must assign a color to every edge")
        for c in self.colors:
            if not 0 <= c < self.r:
                raise InvalidParameterError(f"color {c} out of range 0..{self.r - 1}")

    def color_of(self, u: int, v: int) -> int:
        return self.colors[self.host.edge_index(u, v)]

    def class_adjacency(self, s: int) -> list[set]:
        adj = [set() for _ in range(self.host.n)]
        for (u, v), c in zip(self.host.edges, self.colors):
            if c == s:
                adj[u].add(v)
                adj[v].add(u)
        return adj

    def class_edges(self, s: int) -> list[tuple[int, int]]:
        return [e for e, c in zip(self.host.edges, self.colors) if c == s]


@dataclass(frozen=True)
class RamseyVerdict:
    """Outcome of an exhaustive search.

    ``coloring`` holds a coloring without a monochromatic copy when the host
    is not Ramsey; ``nodes`` counts the color assignments tried.
    """

    is_ramsey: bool
    coloring: EdgeColoring | None
    nodes: int
    edge_order: tuple = ()


def find_mono_copy(coloring: EdgeColoring, F: PatternSpec):
    """``(color, vertices)`` of a monochromatic copy of ``F``, or ``None``."""
    for s in range(coloring.r):
        found = find_copy(coloring.class_adjacency(s), F)
        if found is not None:
            return s, found
    return None


# -- exhaustive search ----------------------------------------------------------------


def _bfs_edge_order(G: Graph) -> list[int]:
    seen = [False] * G.n
    order = []
    taken = [False] * G.num_edges
    for root in range(G.n):
        if seen[root]:
            continue
        seen[root] = True
        q = deque([root])
        while q:
            x = q.popleft()
            for y in G.adj[x]:
                i = G.edge_index(x, y)
                if not taken[i]:
                    taken[i] = True
                    order.append(i)
                if not seen[y]:
                    seen[y] = True
                    q.append(y)
    return order


def _search(G: Graph, F: PatternSpec, r: int, budget: int):
    """Least good coloring in BFS edge order with canonical color introduction.

    Returns ``(colors or None, nodes, order)``; raises on budget exhaustion.
    """
    order = _bfs_edge_order(G)
    m = len(order)
    adj = [[set() for _ in range(G.n)] for _ in range(r)]
    assign = [0] * m
    nodes = 0
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * m + 1000))

    def go(i, used):
        nonlocal nodes
        if i == m:
            return True
        u, v = G.edges[order[i]]
        for c in range(min(used + 1, r)):
            nodes += 1
            if nodes > budget:
                raise BudgetExhaustedError(f"search budget of {budget} nodes exhausted", nodes)
            A = adj[c]
            A[u].add(v)
            A[v].add(u)
            if find_copy_through(A, u, v, F) is None:
                assign[i] = c
                if go(i + 1, max(used, c + 1)):
                    return True
            A[u].discard(v)
            A[v].discard(u)
        return False

    ok = go(0, 0)
    if not ok:
        return None, nodes, order
    colors = [0] * m
    for i, e in enumerate(order):
        colors[e] = assign[i]
    return colors, nodes, order


def is_ramsey(G: Graph, F: PatternSpec, r: int, budget: int = DEFAULT_BUDGET, threads: int = 1) -> RamseyVerdict:
    """Decide whether every ``r``-coloring of ``G`` has a monochromatic ``F``.

    The search runs in one process whatever ``threads`` says; the verdict and
    the returned coloring (the least one in BFS edge order) are deterministic.
    """
    if r < 1:
        raise InvalidParameterError("r must be at least 1")
    colors, nodes, order = _search(G, F, r, budget)
    if colors is None:
        return RamseyVerdict(True, None, nodes, tuple(order))
    col = EdgeColoring(G, r, tuple(colors))
    if find_mono_copy(col, F) is not None:
        raise CertificateError("search returned a coloring with a monochromatic copy")
    return RamseyVerdict(False, col, nodes, tuple(order))


def ffree_coloring_small(H: Graph, F: PatternSpec, r: int, budget: int = DEFAULT_BUDGET):
    """An ``r``-coloring of ``H`` with no monochromatic ``F``, or ``None`` if none exists."""
    if H.num_edges > SMALL_EDGE_LIMIT:
        raise SizeLimitError(f"exhaustive coloring is limited to {SMALL_EDGE_LIMIT} edges")
    colors, _, _ = _search(H, F, r, budget)
    if colors is None:
        return None
    return EdgeColoring(H, r, tuple(colors))


# -- greedy back-degree coloring --------------------------------------------------------


def greedy_backdegree_coloring(G: Graph, r: int, delta: int) -> EdgeColoring:
    """Color so that every color class is ``(delta-1)``-degenerate.

    Needs ``m(G) < (r(delta-1)+1)/2``, which bounds every back-degree of a
    degeneracy order by ``r(delta-1)``.
    """
    if r < 1 or delta < 1:
        raise InvalidParameterError("need r >= 1 and delta >= 1")
    bound = Fraction(r * (delta - 1) + 1, 2)
    dens = m_density(G).value
    if dens >= bound:
        raise PreconditionError(f"m(G) = {dens} is not below {bound}")
    order, _ = degeneracy_order(G)
    pos = {v: i for i, v in enumerate(order)}
    colors = [0] * G.num_edges
    for v in order:
        back = sorted(u for u in G.neighbors(v) if pos[u] < pos[v])
        if len(back) > r * (delta - 1):
            raise PreconditionError(f"vertex {v} has back-degree {len(back)} > {r * (delta - 1)}")
        for j, u in enumerate(back):
            colors[G.edge_index(u, v)] = j // (delta - 1)
    return EdgeColoring(G, r, tuple(colors))


# -- partition engines --------------------------------------------------------------


def _require_m1k(G: Graph, k: int, bound: int) -> None:
    """Raise unless ``m1(G, k) <= bound``.

    Cheap sufficient conditions are tried first: ``m1(G) <= bound``, too few
    vertices, and the ``m``-density criterion
    ``m(G) < bound - (bound-1)/max(k, 2 bound + 1)``.
    """
    if G.num_edges == 0 or G.n < k:
        return
    if m_density(G).value < bound - Fraction(bound - 1, max(k, 2 * bound + 1)):
        return
    if m1_density(G).value <= bound:
        return
    val = m1k_density(G, k).value
    if val > bound:
        raise PreconditionError(f"m1(G,{k}) = {val} exceeds {bound}")


def _contract_and_color(G: Graph, bound: int, small: PatternSpec, r: int, budget: int):
    """Shared first half of the engines.

    Returns ``(colors, certificate, classes)``: colors of edges inside family
    members (``None`` elsewhere) and the forest classes of the contracted
    graph pulled back to lists of original edge indices.
    """
    cert = contract_dense(G, bound)
    colors = [None] * G.num_edges
    for H in cert.family:
        sub, relabel = induced_subgraph(G, H)
        back = {i: v for v, i in relabel.items()}
        col = ffree_coloring_small(sub, small, r, budget)
        if col is None:
            raise PreconditionError(
                f"a dense piece on {len(H)} vertices has no {small}-free {r}-coloring; "
                "the supplied Ramsey value is too large"
            )
        for (a, b), c in zip(sub.edges, col.colors):
            colors[G.edge_index(back[a], back[b])] = c
    part = nash_williams(cert.contracted)
    groups = pull_back_edges(G, cert.vmap)
    seen: Counter = Counter()
    ends = cert.contracted.edge_list()
    owner = [None] * len(ends)
    for i, cls in enumerate(part.classes):
        for e in cls:
            owner[e] = i
    classes = [[] for _ in part.classes]
    for e, pair in enumerate(ends):
        u, v = groups[pair][seen[pair]]
        seen[pair] += 1
        classes[owner[e]].append(G.edge_index(u, v))
    return colors, cert, classes


def _certified(G, r, colors, F) -> EdgeColoring:
    col = EdgeColoring(G, r, tuple(colors))
    bad = find_mono_copy(col, F)
    if bad is not None:
        raise CertificateError(f"monochromatic {F} in color {bad[0]} on vertices {bad[1]}")
    return col


def cycle_free_partition(G: Graph, length: int, r: int, R: int, budget: int = DEFAULT_BUDGET) -> EdgeColoring:
    """``r``-coloring with no monochromatic cycle of the given length.

    ``R`` must be a valid value (or upper bound) of the Ramsey number of that
    cycle for ``r`` colors, and ``m1(G, R) <= r`` is required.
    """
    if length < 3 or r < 1:
        raise InvalidParameterError("need length >= 3 and r >= 1")
    _require_m1k(G, R, r)
    F = PatternSpec.cycle(length)
    colors, _, classes = _contract_and_color(G, r, F, r, budget)
    if len(classes) > r:
        raise CertificateError(f"contracted graph needs {len(classes)} > {r} forests")
    for i, cls in enumerate(classes):
        for e in cls:
            colors[e] = i
    return _certified(G, r, colors, F)


def biclique_free_partition(G: Graph, a: int, b: int, r: int, R: int, budget: int = DEFAULT_BUDGET) -> EdgeColoring:
    """``r``-coloring with no monochromatic ``K_{a,b}`` (needs ``b >= (a-1)^2 + 1``)."""
    if a < 2 or r < 1:
        raise InvalidParameterError("need a >= 2 and r >= 1")
    if b < (a - 1) ** 2 + 1:
        raise InvalidParameterError(f"need b >= (a-1)^2 + 1 = {(a - 1) ** 2 + 1}")
    bound = r * (a - 1)
    _require_m1k(G, R, bound)
    F = PatternSpec.biclique(a, b)
    colors, _, classes = _contract_and_color(G, bound, F, r, budget)
    if len(classes) > bound:
        raise CertificateError(f"contracted graph needs {len(classes)} > {bound} forests")
    # a-1 consecutive forests share a color
    for i, cls in enumerate(classes):
        for e in cls:
            colors[e] = i // (a - 1)
    return _certified(G, r, colors, F)


def path_free_partition(G: Graph, length: int, r: int, R: int, budget: int = DEFAULT_BUDGET) -> EdgeColoring:
    """``r``-coloring with no monochromatic path of ``length`` edges.

    Uses ``h = floor(r/2)`` forests, each split into two star forests, so
    ``m1(G, R) <= h`` is required with ``R`` a valid Ramsey value for the
    path with ``floor(length/3)`` edges.
    """
    if length < 3 or r < 2:
        raise InvalidParameterError("need length >= 3 and r >= 2")
    half = r // 2
    _require_m1k(G, R, half)
    F = PatternSpec.path(length)
    small = PatternSpec.path(length // 3)
    colors, cert, classes = _contract_and_color(G, half, small, r, budget)
    if len(classes) > half:
        raise CertificateError(f"contracted graph needs {len(classes)} > {half} forests")
    for i, cls in enumerate(classes):
        # split in the contracted graph, where the class is a forest
        image = {}
        for e in cls:
            u, v = G.edges[e]
            a, b = cert.vmap[u], cert.vmap[v]
            image[e] = (min(a, b), max(a, b))
        if len(set(image.values())) != len(image):
            raise CertificateError("forest class repeats a contracted pair")
        lookup = {p: e for e, p in image.items()}
        parts = split_into_star_forests(list(image.values()), cert.contracted.n)
        for j, part in enumerate(parts):
            for p in part:
                colors[lookup[p]] = 2 * i + j
    return _certified(G, r, colors, F)


# -- star colorings inside G(n,k,m) ---------------------------------------------------


def is_star_coloring(coloring: EdgeColoring, A, B) -> bool:
    """Whether the edges between ``A`` and ``B`` form an ``A``-centered star coloring."""
    A, B = list(A), list(B)
    seen = set()
    for a in A:
        cols = {coloring.color_of(a, b) for b in B}
        if len(cols) != 1:
            return False
        seen |= cols
    return len(seen) == len(A)


def _fiber_colors(coloring, A, v):
    return tuple(coloring.color_of(a, v) for a in A)


def _pigeonhole(coloring, A, fiber, s):
    """Largest color-set class of the fiber, then its largest color-order class."""
    by_set: dict = {}
    for v in fiber:
        by_set.setdefault(tuple(sorted(_fiber_colors(coloring, A, v))), []).append(v)
    key = min(by_set, key=lambda t: (-len(by_set[t]), t))
    by_order: dict = {}
    for v in by_set[key]:
        by_order.setdefault(_fiber_colors(coloring, A, v), []).append(v)
    key = min(by_order, key=lambda t: (-len(by_order[t]), t))
    group = by_order[key]
    return group[:s] if len(group) >= s else None


def extract_star_coloring(fg, coloring: EdgeColoring, length: int, s: int):
    """Find ``A`` (a ``k``-set of the base) and ``B`` (``s`` vertices of its fiber)
    on which the coloring is an ``A``-centered star coloring.

    ``fg`` is a :class:`~sparseramsey.constructions.FiberedGraph`. First an
    auxiliary graph on the base records, for fibers that are not colorful, a
    pair of base vertices joined to a common fiber vertex in one color; this
    stops at a colorful fiber or when no independent ``k``-set remains. Then
    the fiber is pigeonholed by incident color set and by color order.
    Raises :class:`NotFoundError` when no such pair exists (parameters below
    the guarantee, or a coloring with a monochromatic path of ``length``).
    """
    k = fg.k
    if coloring.host != fg.graph:
        raise InvalidParameterError("coloring is not a coloring of this fibered graph")
    if s < 1 or length < 1:
        raise InvalidParameterError("need s >= 1 and length >= 1")

    def colorful(A):
        return all(len(set(_fiber_colors(coloring, A, v))) == k for v in fg.fibers[A])

    P: dict = {}
    first = None
    while True:
        A = next((A for A in combinations(fg.base, k) if not any(p in P for p in combinations(A, 2))), None)
        if A is None:
            break
        if colorful(A):
            first = A
            break
        for v in fg.fibers[A]:
            cols = _fiber_colors(coloring, A, v)
            pair = next(((i, j) for i, j in combinations(range(k), 2) if cols[i] == cols[j]), None)
            if pair is not None:
                P[(A[pair[0]], A[pair[1]])] = cols[pair[0]]
                break
    candidates = [first] if first is not None else []
    candidates += [A for A in fg.fibers if A != first and colorful(A)]
    for A in candidates:
        B = _pigeonhole(coloring, A, fg.fibers[A], s)
        if B is not None:
            if not is_star_coloring(coloring, A, B):
                raise CertificateError("pigeonholed set is not a star coloring")
            return tuple(A), tuple(B)
    if not candidates:
        raise NotFoundError("no colorful fiber")
    raise NotFoundError(f"no colorful fiber has {s} vertices with a common color order")


# -- coloring files --------------------------------------------------------------


def format_coloring(col: EdgeColoring) -> str:
    lines = [f"{col.host.n} {col.host.num_edges} {col.r}"]
    lines.extend(f"{u} {v} {c}" for (u, v), c in zip(col.host.edges, col.colors))
    return "\n".join(lines) + "\n"


def parse_coloring(text: str) -> EdgeColoring:
    """Parse the ``n e r`` header followed by ``u v c`` lines."""
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1) if ln.strip() and not ln.strip().startswith("#")]
    if not lines:
        raise ValueError("empty coloring file")
    try:
        n, e, r = (int(t) for t in lines[0][1].split())
    except ValueError:
        raise ValueError(f"line {lines[0][0]}: expected header 'n e r'") from None
    if len(lines) - 1 != e:
        raise ValueError(f"header announces {e} edges, found {len(lines) - 1}")
    edges, cols = [], {}
    for lineno, line in lines[1:]:
        parts = line.split()
        if len(parts) != 3:
            raise ValueError(f"line {lineno}: expected 'u v c'")
        u, v, c = (int(t) for t in parts)
        if u > v:
            u, v = v, u
        edges.append((u, v))
        cols[(u, v)] = c
    G = Graph(n, edges)
    return EdgeColoring(G, r, tuple(cols[p] for p in G.edges))


def read_coloring(path) -> EdgeColoring:
    return parse_coloring(Path(path).read_text())


def write_coloring(col: EdgeColoring, path) -> None:
    Path(path).write_text(format_coloring(col))
