"""
Densities, forests and orientations
===================================

Run with ``python demos/01_densities.py``.
"""

from sparseramsey.decompose import acyclic_orient, nash_williams, split_into_star_forests
from sparseramsey.errors import InfeasibleError
from sparseramsey.graph import complete_graph, cycle_graph, disjoint_union
from sparseramsey.parameters import m1_density, m1k_density, m2_density, m_density

# K6 has 15 edges on 6 vertices, so m = 5/2 and m1 = 3
K6 = complete_graph(6)
print("m(K6)  =", m_density(K6).value)
print("m1(K6) =", m1_density(K6).value)

# every value comes with a witness vertex set
G = disjoint_union(complete_graph(4), cycle_graph(7))
res = m_density(G)
print("m(K4 + C7) =", res.value, "attained on", res.witness)

# the size-constrained version ignores small dense pieces
for k in (2, 4, 5, 8):
    print(f"m1(K4 + C7, {k}) =", m1k_density(G, k).value)

print("m2(C4) =", m2_density(cycle_graph(4)).value)

# arboricity is ceil(m1): K6 splits into three forests
part = nash_williams(K6)
part.check()
print("forests of K6:", len(part.classes))

# each forest splits again into two star forests
stars = [half for cls in part.edge_classes() for half in split_into_star_forests(cls, K6.n)]
print("star forests of K6:", len(stars))

# acyclic orientations follow degeneracy, which can exceed m1
K4 = complete_graph(4)
print("m1(K4) =", m1_density(K4).value)
try:
    acyclic_orient(K4, 2)
except InfeasibleError as exc:
    print("in-degree 2:", exc)
print("in-degree 3 works, max in-degree", acyclic_orient(K4, 3).max_indegree)
