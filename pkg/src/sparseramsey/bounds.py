"""Bounds on the Ramsey density ``m*(F, r)`` and the small-Ramsey-number table.

Every rule below yields a rational bound tagged with a short rule name.
Lower-bound rules only ever read LOWER values of Ramsey numbers (in the
denominators of the error terms, and for cliques), upper-bound rules only
read UPPER values, so a conservative table can never produce an invalid
bound.

Rule names:

lower: ``chromatic``, ``two-density``, ``min-degree``, ``clique-number``,
``biclique-forest``, ``even-cycle-forest``, ``odd-cycle``,
``path-star-forest``, ``star-pigeonhole``, ``clique-exact``

upper: ``bipartite-degree`` (strict), ``complete-graph``,
``complete-bipartite``, ``biclique-forest`` (strict), ``even-cycle-forest``
(strict), ``path-glued-construction`` (strict), ``star-pigeonhole``,
``clique-exact``, ``p3-witness``
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from pathlib import Path

from .constructions import gstar_k_formula, kpq_sizes
from .errors import BoundsInconsistencyError, InvalidParameterError, TableContradictionError, TableParseError
from .parameters import (
    chromatic_number,
    clique_number,
    m2_density,
    max_min_degree,
    min_d_over_bipartitions,
)
from .patterns import PatternSpec

__all__ = [
    "RamseyTableEntry",
    "RamseyTable",
    "BoundTerm",
    "BoundInterval",
    "load_table",
    "parse_table",
    "default_table",
    "aliases",
    "ramsey_lower",
    "ramsey_upper",
    "lower_bounds",
    "upper_bounds",
    "best_interval",
    "PI_LOW",
    "E2_HIGH",
]

# conservative rational enclosures: PI_LOW < pi, E2_HIGH > e^2
PI_LOW = Fraction(314159, 100000)
E2_HIGH = Fraction(73891, 10000)


# -- table -----------------------------------------------------------------------------


@dataclass(frozen=True)
class RamseyTableEntry:
    kind: str
    params: tuple
    r: int
    lower: int
    upper: int | None
    source: str

    @property
    def key(self):
        return (self.kind, self.params, self.r)


@dataclass
class RamseyTable:
    entries: dict = field(default_factory=dict)

    def add(self, entry: RamseyTableEntry, lineno=None) -> None:
        old = self.entries.get(entry.key)
        if old is not None and (old.lower, old.upper) != (entry.lower, entry.upper):
            raise TableContradictionError(f"entry {entry.key} disagrees with an earlier line", lineno)
        self.entries[entry.key] = entry

    def get(self, kind, params, r):
        return self.entries.get((kind, tuple(params), r))

    def generalized(self, patterns):
        pats = tuple(str(p) for p in patterns)
        return self.entries.get(("generalized", pats, len(pats)))

    def __len__(self):
        return len(self.entries)


_LINE = re.compile(r"^(?P<desc>[^|]+)\|\s*r\s*=\s*(?P<r>\d+)\s*\|(?P<vals>[^|]+)\|(?P<src>.*)$")


def _parse_desc(desc: str, lineno):
    parts = desc.split(None, 1)
    if len(parts) != 2:
        raise TableParseError("expected 'kind params'", lineno)
    kind, rest = parts[0], parts[1].strip()
    if kind == "generalized":
        pats = []
        for item in rest.split(","):
            item = item.strip()
            pk, sep, pv = item.partition(":")
            if not sep or not pv.strip().isdigit():
                raise TableParseError(f"bad generalized component {item!r}", lineno)
            pats.append(f"{pk.strip()}:{int(pv)}")
        return kind, tuple(pats)
    try:
        params = tuple(int(x) for x in re.split(r"[,\s]+", rest) if x)
    except ValueError:
        raise TableParseError(f"bad parameters {rest!r}", lineno) from None
    try:
        PatternSpec(kind, params)
    except InvalidParameterError as exc:
        raise TableParseError(str(exc), lineno) from None
    return kind, params


def parse_table(text: str) -> RamseyTable:
    table = RamseyTable()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        m = _LINE.match(line)
        if not m:
            raise TableParseError("expected 'kind params | r=R | lower upper | source'", lineno)
        kind, params = _parse_desc(m["desc"].strip(), lineno)
        r = int(m["r"])
        vals = m["vals"].split()
        if len(vals) != 2:
            raise TableParseError("expected 'lower upper'", lineno)
        try:
            lower = int(vals[0])
            upper = None if vals[1] == "?" else int(vals[1])
        except ValueError:
            raise TableParseError("bounds must be integers or '?'", lineno) from None
        if lower < 2:
            raise TableParseError("a Ramsey number is at least 2", lineno)
        if upper is not None and upper < lower:
            raise TableContradictionError(f"lower {lower} exceeds upper {upper}", lineno)
        if kind == "generalized" and r != len(params):
            raise TableParseError("r must equal the number of listed patterns", lineno)
        if r < 1:
            raise TableParseError("r must be positive", lineno)
        src = m["src"].strip().strip('"')
        table.add(RamseyTableEntry(kind, params, r, lower, upper, src), lineno)
    return table


def load_table(path) -> RamseyTable:
    return parse_table(Path(path).read_text())


def default_table() -> RamseyTable:
    """The seed table shipped with the package."""
    text = resources.files("sparseramsey").joinpath("data/ramsey_table.txt").read_text()
    return parse_table(text)


# -- pattern aliases and Ramsey-number accessors ---------------------------------------


def aliases(F: PatternSpec) -> list[tuple[str, tuple]]:
    """Descriptors naming the same graph as ``F`` (``F`` itself first)."""
    if F.kind == "explicit":
        return []
    k, p = F.kind, F.params
    out = [(k, p)]

    def add(kind, params):
        if (kind, params) not in out:
            out.append((kind, params))

    if k == "biclique":
        a, b = p
        add("biclique", (b, a))
        if min(a, b) == 1:
            add("star", (max(a, b),))
        if (a, b) == (2, 2):
            add("cycle", (4,))
    if k == "cycle" and p[0] == 4:
        add("biclique", (2, 2))
    if k == "cycle" and p[0] == 3:
        add("clique", (3,))
    if k == "clique" and p[0] == 3:
        add("cycle", (3,))
    if k == "star":
        add("biclique", (1, p[0]))
        if p[0] <= 2:
            add("path", (p[0],))
    if k == "path" and p[0] <= 2:
        add("star", (p[0],))
    if (k, p) in {("path", (1,)), ("star", (1,)), ("biclique", (1, 1))}:
        add("clique", (2,))
    if k == "clique" and p[0] == 2:
        for d in (("path", (1,)), ("star", (1,))):
            add(*d)
    for kind, params in list(out):
        if kind == "star":
            add("biclique", (1, params[0]))
        if kind == "biclique":
            add("biclique", params[::-1])
    return out


def _fallback_lower(kind, params, r) -> tuple[int, str]:
    """A lower bound on ``R(F, r)`` that needs no table."""
    if kind == "cycle":
        ell = params[0]
        return (r - 1) * (ell - 2) + 2, f"R(C_{ell},{r}) >= (r-1)(l-2)+2"
    if kind == "biclique":
        a, b = params
        val = _biclique_ramsey_lower(a, b, r)
        return max(val, a + b), f"R(K_{a},{b},{r}) >= max(asymptotic bound, a+b)"
    if kind == "path":
        return params[0] + 1, f"R(P_{params[0]},{r}) >= l+1"
    if kind == "clique":
        return max(2, params[0]), f"R(K_{params[0]},{r}) >= l"
    if kind == "star":
        return params[0] + 1, f"R(S_{params[0]},{r}) >= l+1"
    return 2, "R >= 2"


def _root_floor(x: Fraction, k: int, scale: int = 10**6) -> Fraction:
    """A rational ``y <= x^(1/k)`` with denominator ``scale``."""
    # largest integer j with (j/scale)^k <= x
    num = x.numerator * scale**k
    j = _iroot(num // x.denominator, k)
    return Fraction(j, scale)


def _iroot(n: int, k: int) -> int:
    if n < 2:
        return n
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


def _biclique_ramsey_lower(a: int, b: int, r: int) -> int:
    """``(2 pi sqrt(ab))^(1/(a+b)) ((a+b)/e^2) r^((ab-1)/(a+b))`` rounded down.

    Each factor is replaced by a rational lower bound, so the result stays a
    valid lower bound on the Ramsey number.
    """
    s = a + b
    sqrt_ab = Fraction(math.isqrt(a * b * 10**12), 10**6)
    f1 = _root_floor(2 * PI_LOW * sqrt_ab, s)
    f2 = Fraction(s) / E2_HIGH
    f3 = _root_floor(Fraction(r ** (a * b - 1)), s)
    return math.floor(f1 * f2 * f3)


def ramsey_lower(F: PatternSpec, r: int, table: RamseyTable | None) -> tuple[int, str]:
    """Best lower bound on ``R(F, r)`` from the table (all aliases) or the fallbacks."""
    best = (2, "R >= 2")
    for kind, params in aliases(F):
        cand = _fallback_lower(kind, params, r)
        if cand[0] > best[0]:
            best = cand
        entry = table.get(kind, params, r) if table is not None else None
        if entry is not None and entry.lower > best[0]:
            best = (entry.lower, f"table {kind} {','.join(map(str, params))} r={r}: {entry.source}")
        elif entry is not None and entry.lower == best[0] and not best[1].startswith("table"):
            best = (entry.lower, f"table {kind} {','.join(map(str, params))} r={r}: {entry.source}")
    return best


def ramsey_upper(F: PatternSpec, r: int, table: RamseyTable | None):
    """Best upper bound on ``R(F, r)`` from the table (all aliases), or ``None``."""
    best = None
    for kind, params in aliases(F):
        entry = table.get(kind, params, r) if table is not None else None
        if entry is not None and entry.upper is not None and (best is None or entry.upper < best[0]):
            best = (entry.upper, f"table {kind} {','.join(map(str, params))} r={r}: {entry.source}")
    if F.kind == "cycle" and F.params[0] % 2 == 1:
        val = math.factorial(r + 2) * F.params[0]
        if best is None or val < best[0]:
            best = (val, f"R(C_l,r) <= (r+2)! l")
    return best


# -- invariants of the forbidden graph -------------------------------------------------


def _invariants(F: PatternSpec) -> dict:
    """``chi``, ``m2`` (None when undefined), ``maxdelta``, ``omega`` and ``d`` (None unless bipartite)."""
    k, p = F.kind, F.params
    if k == "path":
        ell = p[0]
        return dict(chi=2, m2=None if ell < 2 else Fraction(1), maxdelta=1, omega=2, d=1 if ell == 1 else 2)
    if k == "star":
        return dict(chi=2, m2=None if p[0] < 2 else Fraction(1), maxdelta=1, omega=2, d=1)
    if k == "cycle":
        ell = p[0]
        even = ell % 2 == 0
        return dict(
            chi=2 if even else 3,
            m2=Fraction(ell - 1, ell - 2),
            maxdelta=2,
            omega=3 if ell == 3 else 2,
            d=2 if even else None,
        )
    if k == "clique":
        ell = p[0]
        return dict(
            chi=ell,
            m2=None if ell < 3 else Fraction(ell + 1, 2),
            maxdelta=ell - 1,
            omega=ell,
            d=1 if ell == 2 else None,
        )
    if k == "biclique":
        a, b = p
        m2 = None if a + b < 3 else Fraction(a * b - 1, a + b - 2)
        return dict(chi=2, m2=m2, maxdelta=min(a, b), omega=2, d=min(a, b))
    G = F.graph
    return dict(
        chi=chromatic_number(G),
        m2=m2_density(G).value if G.n >= 3 else None,
        maxdelta=max_min_degree(G),
        omega=clique_number(G),
        d=min_d_over_bipartitions(G),
    )


# -- rule evaluation -------------------------------------------------------------------


@dataclass(frozen=True)
class BoundTerm:
    value: Fraction
    rule: str
    strict: bool = False
    detail: str = ""


def _canonical(F: PatternSpec) -> PatternSpec:
    """Prefer the most specific family name for family rules."""
    if F.kind == "biclique" and min(F.params) == 1:
        return PatternSpec.star(max(F.params))
    if F.kind == "path" and F.params[0] <= 2:
        return PatternSpec.star(F.params[0])
    if F.kind == "clique" and F.params[0] == 2:
        return PatternSpec.star(1)
    return F


def _star_value(ell, r) -> Fraction:
    return Fraction(r * (ell - 1) + 1, r * (ell - 1) + 2)


def lower_bounds(F: PatternSpec, r: int, table: RamseyTable | None = None) -> list[BoundTerm]:
    if r < 2:
        raise InvalidParameterError("bounds need r >= 2")
    inv = _invariants(F)
    out = [BoundTerm(Fraction((inv["chi"] - 1) ** r, 2), "chromatic", detail=f"chi = {inv['chi']}")]
    m2 = inv["m2"]
    if m2 is not None and (m2 >= 3 or (r == 2 and m2 > 1)):
        out.append(BoundTerm(Fraction(r, 2) * m2, "two-density", detail=f"m2 = {m2}"))
    out.append(
        BoundTerm(Fraction(r * (inv["maxdelta"] - 1) + 1, 2), "min-degree", detail=f"max min-degree = {inv['maxdelta']}")
    )
    w = inv["omega"]
    Rw, src = ramsey_lower(PatternSpec.clique(w), r, table)
    out.append(BoundTerm(Fraction(Rw - 1, 2), "clique-number", detail=f"omega = {w}; R >= {Rw} ({src})"))

    C = _canonical(F)
    for kind, params in aliases(C):
        if kind == "biclique":
            a, b = sorted(params)
            if a >= 2 and b >= (a - 1) ** 2 + 1:
                t = r * (a - 1)
                R, src = ramsey_lower(PatternSpec.biclique(a, b), r, table)
                eps = Fraction(t - 1, max(R, 2 * t + 1))
                assert eps < Fraction(1, 2)
                out.append(BoundTerm(t - eps, "biclique-forest", detail=f"eps = {eps}; R >= {R} ({src})"))
        if kind == "cycle":
            ell = params[0]
            if ell % 2 == 0:
                R, src = ramsey_lower(PatternSpec.cycle(ell), r, table)
                eps = Fraction(r - 1, max(R, 2 * r + 1))
                assert eps < Fraction(1, 2)
                out.append(BoundTerm(r - eps, "even-cycle-forest", detail=f"eps = {eps}; R >= {R} ({src})"))
            else:
                out.append(BoundTerm(Fraction(2 ** (r - 1)), "odd-cycle"))
        if kind == "path" and params[0] >= 3:
            ell = params[0]
            half = r // 2
            R, src = ramsey_lower(PatternSpec.path(ell // 3), r, table)
            eps = Fraction(half - 1, max(R, 2 * half + 1))
            assert eps < Fraction(1, 2)
            out.append(BoundTerm(half - eps, "path-star-forest", detail=f"eps = {eps}; R >= {R} ({src})"))
        if kind == "star":
            out.append(BoundTerm(_star_value(params[0], r), "star-pigeonhole"))
        if kind == "clique" and params[0] >= 3:
            R, src = ramsey_lower(PatternSpec.clique(params[0]), r, table)
            out.append(BoundTerm(Fraction(R - 1, 2), "clique-exact", detail=f"R >= {R} ({src})"))
    return out


def upper_bounds(F: PatternSpec, r: int, table: RamseyTable | None = None) -> list[BoundTerm]:
    if r < 2:
        raise InvalidParameterError("bounds need r >= 2")
    inv = _invariants(F)
    out = []
    if inv["d"] is not None:
        out.append(BoundTerm(Fraction(r * (inv["d"] - 1) + 1), "bipartite-degree", True, detail=f"d = {inv['d']}"))
    up = ramsey_upper(F, r, table)
    if up is not None:
        out.append(BoundTerm(Fraction(up[0] - 1, 2), "complete-graph", detail=f"R <= {up[0]} ({up[1]})"))

    C = _canonical(F)
    seen_kpq = set()
    for kind, params in aliases(C):
        if kind == "biclique":
            a, b = sorted(params)
            if (a, b) not in seen_kpq and a >= 1:
                seen_kpq.add((a, b))
                p, q = kpq_sizes(a, b, r)
                out.append(BoundTerm(Fraction(p * q, p + q), "complete-bipartite", detail=f"K_{p},{q}"))
            if a >= 2 and b >= (a - 1) ** 2 + 1:
                out.append(BoundTerm(Fraction(r * (a - 1) + 1), "biclique-forest", True))
        if kind == "cycle" and params[0] % 2 == 0:
            out.append(BoundTerm(Fraction(r + 1), "even-cycle-forest", True))
        if kind == "path" and params[0] >= 3:
            out.append(BoundTerm(Fraction(gstar_k_formula(params[0], r)), "path-glued-construction", True))
            if params[0] == 3 and r == 2:
                out.append(BoundTerm(Fraction(1), "p3-witness", detail="5-cycle with a pendant edge at every vertex"))
        if kind == "star":
            out.append(BoundTerm(_star_value(params[0], r), "star-pigeonhole"))
        if kind == "clique" and params[0] >= 3:
            u = ramsey_upper(PatternSpec.clique(params[0]), r, table)
            if u is not None:
                out.append(BoundTerm(Fraction(u[0] - 1, 2), "clique-exact", detail=f"R <= {u[0]} ({u[1]})"))
    return out


@dataclass(frozen=True)
class BoundInterval:
    """``lower <= m*(F, r) <= upper`` (``<`` when ``upper_strict``); ``upper`` None means unbounded."""

    lower: Fraction
    upper: Fraction | None
    upper_strict: bool
    lower_sources: tuple
    upper_sources: tuple
    notes: tuple = ()

    def __str__(self):
        up = "inf" if self.upper is None else str(self.upper)
        rel = "<" if self.upper_strict else "<="
        return f"{self.lower} <= m* {rel} {up}"


def best_interval(F: PatternSpec, r: int, table: RamseyTable | None = None) -> BoundInterval:
    lows = lower_bounds(F, r, table)
    ups = upper_bounds(F, r, table)
    lo = max(t.value for t in lows)
    lo_src = tuple(sorted({t.rule for t in lows if t.value == lo}))
    notes = []
    if F.kind == "cycle" and F.params[0] % 2 == 1:
        notes.append("odd cycles: the length-independent upper bound f(r) is unknown (non-quantitative)")
    if not ups:
        return BoundInterval(lo, None, False, lo_src, (), tuple(notes))
    hi = min(t.value for t in ups)
    at = [t for t in ups if t.value == hi]
    strict = any(t.strict for t in at)
    hi_src = tuple(sorted({t.rule for t in at}))
    if lo > hi or (lo == hi and strict):
        raise BoundsInconsistencyError(f"lower bound {lo} ({lo_src}) exceeds upper bound {hi} ({hi_src})")
    return BoundInterval(lo, hi, strict, lo_src, hi_src, tuple(notes))
