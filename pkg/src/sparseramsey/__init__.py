"""Exact Ramsey-density toolkit: densities, forest decompositions, dense
contraction, pattern-avoiding edge colorings, sparse Ramsey constructions and
bounds on the Ramsey density ``m*(F, r)``."""

__version__ = "0.1.0"

from .graph import Graph, MultiGraph  # noqa: E402
from .parameters import m1_density, m1k_density, m2_density, m_density  # noqa: E402
from .patterns import PatternSpec, parse_pattern  # noqa: E402

__all__ = [
    "Graph",
    "MultiGraph",
    "PatternSpec",
    "parse_pattern",
    "m_density",
    "m1_density",
    "m1k_density",
    "m2_density",
]
