"""
Bounds for the four-cycle and a C4-free coloring
================================================

The seed table knows R(C4, 2) = 6, which pins the Ramsey density of C4
(equivalently K_{2,2}) for two colors between 11/6 and 21/10. The upper
end is the density of K_{3,7}; the lower end comes with a coloring engine
that 2-colors any graph below the threshold without a monochromatic C4.
"""

import random
from fractions import Fraction

from sparseramsey.bounds import best_interval, default_table, upper_bounds
from sparseramsey.color import cycle_free_partition, find_mono_copy
from sparseramsey.constructions import kpq_sizes, kpq_witness
from sparseramsey.graph import Graph, complete_graph, disjoint_union, random_gnp
from sparseramsey.parameters import m_density
from sparseramsey.patterns import PatternSpec

table = default_table()
C4 = PatternSpec.cycle(4)
print("interval for C4, r=2:", best_interval(C4, 2, table))
for t in upper_bounds(C4, 2, table):
    print(f"  upper {t.rule:18s} {'<' if t.strict else '<='} {t.value}  {t.detail}")

p, q = kpq_sizes(2, 2, 2)
K = kpq_witness(2, 2, 2)
print(f"K_{{{p},{q}}} has density", m_density(K).value)

# a graph below the threshold: K5 minus an edge (m = 9/5, but too dense for
# two forests, so it is contracted and colored by search) plus some random
# sparse graphs
rng = random.Random(1)
parts = [Graph(5, [e for e in complete_graph(5).edges if e != (3, 4)])]
while len(parts) < 4:
    H = random_gnp(9, 0.3, rng)
    if m_density(H).value < Fraction(11, 6):
        parts.append(H)
G = disjoint_union(*parts)
print("host:", G.n, "vertices,", G.num_edges, "edges, m =", m_density(G).value)
col = cycle_free_partition(G, 4, 2, 6)
print("monochromatic C4:", find_mono_copy(col, C4))
print("color counts:", [col.colors.count(c) for c in range(2)])
