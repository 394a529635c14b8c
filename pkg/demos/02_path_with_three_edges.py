"""
The Ramsey density of the path with three edges
================================================

A 5-cycle with a pendant edge at every vertex has density exactly 1, and
every red/blue coloring of it contains a monochromatic path with three
edges. No graph of smaller density can do that, so the density is 1.
"""

from sparseramsey.bounds import best_interval, default_table, lower_bounds
from sparseramsey.color import is_ramsey
from sparseramsey.graph import cycle_graph, p3_witness
from sparseramsey.parameters import m_density
from sparseramsey.patterns import PatternSpec

P3 = PatternSpec.path(3)
W = p3_witness()
print("witness:", W.n, "vertices,", W.num_edges, "edges, m =", m_density(W).value)

verdict = is_ramsey(W, P3, 2)
print("every 2-coloring has a monochromatic P3:", verdict.is_ramsey, f"({verdict.nodes} search nodes)")

# the bare 5-cycle is not enough; the search hands back a good coloring
v = is_ramsey(cycle_graph(5), P3, 2)
print("C5 alone:", v.is_ramsey, "colors", dict(zip(v.coloring.host.edges, v.coloring.colors)))

# the bounds calculator closes the interval from both sides
table = default_table()
for term in lower_bounds(P3, 2, table):
    print(f"  lower {term.rule:18s} {term.value}  {term.detail}")
print("interval:", best_interval(P3, 2, table))
