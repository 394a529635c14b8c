"""Sparse Ramsey constructions.

``G(n, k, m)``: a base ``N = {0..n-1}`` and, for every ``k``-subset ``A`` of
``N`` in lexicographic order, a fiber ``M(A)`` of ``m`` new vertices each
joined to exactly ``A``.

``G*``: start from ``G(n_1, k, m_1)`` and, level by level, glue a copy of
``G(m_i, k, m_{i+1})`` onto every fiber of the previous level (the fiber
plays the role of the base of the copy).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .decompose import orient_by_order
from .errors import InvalidParameterError, SizeLimitError, TableMissError
from .graph import Graph, complete_bipartite_graph
from .parameters import m_density

__all__ = [
    "FiberedGraph",
    "GStarGraph",
    "build_gnkm",
    "gnkm_density_check",
    "paths_parameters",
    "fiber_size",
    "build_gstar",
    "gstar_size",
    "kpq_sizes",
    "kpq_witness",
    "gstar_k_formula",
    "format_structure",
    "VERTEX_BUDGET",
]

VERTEX_BUDGET = 10**6


@dataclass(frozen=True)
class FiberedGraph:
    """``fibers[A]`` is the tuple of fiber vertices attached to the ``k``-set ``A``."""

    graph: Graph
    n: int
    k: int
    m: int
    fibers: dict = field(compare=False)

    @property
    def base(self):
        return tuple(range(self.n))


def _check_budget(count, budget):
    if count > budget:
        raise SizeLimitError(f"construction needs {count} vertices, budget is {budget}")


def build_gnkm(n: int, k: int, m: int, budget: int = VERTEX_BUDGET) -> FiberedGraph:
    if not (1 <= k <= n) or m < 1:
        raise InvalidParameterError("need 1 <= k <= n and m >= 1")
    total = n + math.comb(n, k) * m
    _check_budget(total, budget)
    edges = []
    fibers = {}
    nxt = n
    for A in combinations(range(n), k):
        ids = tuple(range(nxt, nxt + m))
        nxt += m
        fibers[A] = ids
        for v in ids:
            edges.extend((a, v) for a in A)
    return FiberedGraph(Graph(total, edges), n, k, m, fibers)


def gnkm_density_check(g: FiberedGraph) -> Fraction:
    """``m(G(n,k,m))``, asserted to be below ``k``.

    The densest set ``W`` is also checked against ``e/v <= k|B|/(|A|+|B|)``
    where ``A`` and ``B`` are its base and fiber parts.
    """
    res = m_density(g.graph)
    assert res.value < g.k, f"m = {res.value} is not below k = {g.k}"
    if res.witness:
        A = sum(1 for v in res.witness if v < g.n)
        B = len(res.witness) - A
        assert res.value <= Fraction(g.k * B, A + B) < g.k
    return res.value


def fiber_size(k: int, r: int, s: int) -> int:
    """``C(r, k) k! s``: enough fiber vertices to pigeonhole ``s`` with one color order."""
    return math.comb(r, k) * math.factorial(k) * s


def paths_parameters(length: int, k: int, r: int, s: int, table) -> tuple[int, int]:
    """Base size ``n`` and fiber size ``m`` that make star colorings unavoidable.

    ``n`` is the generalized Ramsey number for ``r`` colors avoiding a path
    with ``ceil(length/2)`` edges plus one extra color avoiding ``K_k``; it
    must be present in ``table`` with a known upper value.
    """
    if k < 2 or r < k or s < 1 or length < 3:
        raise InvalidParameterError("need length >= 3, k >= 2, r >= k, s >= 1")
    half = -(-length // 2)
    patterns = [f"path:{half}"] * r + [f"clique:{k}"]
    entry = table.generalized(patterns)
    if entry is None or entry.upper is None:
        raise TableMissError(f"generalized Ramsey number R({', '.join(patterns)}) is not in the table")
    return entry.upper, fiber_size(k, r, s)


# -- G* --------------------------------------------------------------------------------


@dataclass(frozen=True)
class GStarGraph:
    """Glued construction with its level structure.

    ``levels[i]`` lists the fibers (vertex tuples) of level ``i + 1``;
    ``copies[i]`` lists, for the copies glued at level ``i + 2``, pairs
    ``(host fiber, {k-subset of the fiber: new fiber})``.
    """

    graph: Graph
    length: int
    k: int
    r: int
    n: tuple
    s: tuple
    m: tuple
    levels: tuple = field(compare=False)
    copies: tuple = field(compare=False)
    canonical: bool = True

    def orientation(self):
        """Every edge points from its older to its newer endpoint; in-degree is ``k``."""
        return orient_by_order(self.graph, range(self.graph.n))


def gstar_size(k: int, n: tuple, m: tuple) -> int:
    total = n[0] + math.comb(n[0], k) * m[0]
    count = math.comb(n[0], k)  # fibers on the current level
    for i in range(1, len(m)):
        per = math.comb(m[i - 1], k)
        total += count * per * m[i]
        count *= per
    return total


def _canonical_sequences(length, k, r, n):
    h = -(-length // 2)
    if h == 1:
        s = [1]
    else:
        s = [(k + 1) * n[1]] + [n[i + 1] for i in range(1, h - 1)] + [1]
    m = [fiber_size(k, r, si) for si in s]
    return s, m


def build_gstar(
    length: int,
    k: int,
    r: int,
    overrides: dict | None = None,
    relax: bool = False,
    table=None,
    budget: int = VERTEX_BUDGET,
) -> GStarGraph:
    """Build ``G*(length, k, r)``.

    ``overrides`` may give sequences ``n``, ``s`` and ``m`` of length
    ``ceil(length/2)``. Missing ``s`` and ``m`` are derived from ``n`` as in
    the canonical definition. Sequences that break the canonical ties are
    rejected unless ``relax`` is set, in which case the result is marked
    non-canonical. Without overrides ``n`` comes from ``table``.
    """
    if length < 3 or k < 2 or r < k:
        raise InvalidParameterError("need length >= 3, k >= 2 and r >= k")
    h = -(-length // 2)
    overrides = dict(overrides or {})
    if "n" in overrides:
        n = [int(x) for x in overrides["n"]]
    else:
        if table is None:
            raise InvalidParameterError("need a table or explicit n overrides")
        n = [paths_parameters(length, k, r, 1, table)[0]] * h
    if len(n) != h:
        raise InvalidParameterError(f"n needs {h} entries")
    s_can, m_can = _canonical_sequences(length, k, r, n)
    s = [int(x) for x in overrides.get("s", s_can)]
    m = [int(x) for x in overrides.get("m", [fiber_size(k, r, si) for si in s])]
    if len(s) != h or len(m) != h:
        raise InvalidParameterError(f"s and m need {h} entries")
    if min(n) < k or min(m) < 1:
        raise InvalidParameterError("need n_i >= k and m_i >= 1")
    if h > 1 and min(m[:-1]) < k:
        raise InvalidParameterError("fibers that host a glued copy need at least k vertices")
    canonical = s == s_can and m == m_can and len(set(n)) == 1
    if not canonical and not relax:
        raise InvalidParameterError(
            f"sequences n={n}, s={s}, m={m} differ from the definition (s={s_can}, m={m_can}); pass relax"
        )
    total = gstar_size(k, n, m)
    _check_budget(total, budget)

    edges = []
    nxt = n[0]
    level = []
    for A in combinations(range(n[0]), k):
        ids = tuple(range(nxt, nxt + m[0]))
        nxt += m[0]
        level.append(ids)
        for v in ids:
            edges.extend((a, v) for a in A)
    levels = [tuple(level)]
    copies = []
    for i in range(1, h):
        new_level = []
        glued = []
        for M in levels[-1]:
            fib = {}
            for A in combinations(M, k):
                ids = tuple(range(nxt, nxt + m[i]))
                nxt += m[i]
                fib[A] = ids
                new_level.append(ids)
                for v in ids:
                    edges.extend((a, v) for a in A)
            glued.append((M, fib))
        levels.append(tuple(new_level))
        copies.append(tuple(glued))
    assert nxt == total
    return GStarGraph(
        Graph(total, edges), length, k, r, tuple(n), tuple(s), tuple(m), tuple(levels), tuple(copies), canonical
    )


# -- complete bipartite witnesses and the path exponent -----------------------------


def kpq_sizes(a: int, b: int, r: int) -> tuple[int, int]:
    """``p = r(a-1)+1`` and ``q = r(b-1) C(p, a) + 1``."""
    if a < 1 or b < 1 or r < 1:
        raise InvalidParameterError("need a, b, r >= 1")
    p = r * (a - 1) + 1
    q = r * (b - 1) * math.comb(p, a) + 1
    return p, q


def kpq_witness(a: int, b: int, r: int, budget: int = VERTEX_BUDGET) -> Graph:
    p, q = kpq_sizes(a, b, r)
    _check_budget(p + q, budget)
    return complete_bipartite_graph(p, q)


def gstar_k_formula(length: int, r: int) -> int:
    """``ceil((1 - 1/h) r + 1/h)`` with ``h = ceil(length/2)``."""
    if length < 3 or r < 2:
        raise InvalidParameterError("need length >= 3 and r >= 2")
    h = -(-length // 2)
    val = Fraction((h - 1) * r + 1, h)
    k = math.ceil(val)
    assert r - (r - k) * h >= 1
    return k


def format_structure(obj) -> str:
    """Sidecar text: one ``A-subset: fiber vertices`` line per fiber."""
    lines = []
    if isinstance(obj, FiberedGraph):
        lines.append(f"# G({obj.n},{obj.k},{obj.m})")
        for A, ids in obj.fibers.items():
            lines.append(f"{' '.join(map(str, A))}: {' '.join(map(str, ids))}")
    else:
        flag = "" if obj.canonical else " non-canonical"
        lines.append(f"# G*(l={obj.length},k={obj.k},r={obj.r}) n={list(obj.n)} s={list(obj.s)} m={list(obj.m)}{flag}")
        lines.append("# level 1")
        for A, ids in zip(combinations(range(obj.n[0]), obj.k), obj.levels[0]):
            lines.append(f"{' '.join(map(str, A))}: {' '.join(map(str, ids))}")
        for i, glued in enumerate(obj.copies, start=2):
            lines.append(f"# level {i}")
            for _, fib in glued:
                for A, ids in fib.items():
                    lines.append(f"{' '.join(map(str, A))}: {' '.join(map(str, ids))}")
    return "\n".join(lines) + "\n"
