"""
Fibered graphs and star colorings
=================================

G(n, k, m) hangs m new vertices off every k-subset of an n-set. Its
density stays below k however large m is, and any coloring that avoids
long monochromatic paths is forced to look like a star coloring on some
fiber. G* stacks these graphs level by level.
"""

from sparseramsey.color import EdgeColoring, extract_star_coloring, is_star_coloring
from sparseramsey.constructions import (
    build_gnkm,
    build_gstar,
    format_structure,
    gnkm_density_check,
    gstar_k_formula,
)
from sparseramsey.parameters import m1_density

for n, k, m in [(4, 2, 1), (5, 2, 3), (6, 3, 2), (7, 3, 3)]:
    g = build_gnkm(n, k, m)
    print(f"G({n},{k},{m}): {g.graph.n} vertices, m = {gnkm_density_check(g)} < {k}")

print(format_structure(build_gnkm(3, 2, 1)))

# color every edge by its base endpoint: each fiber sees k distinct colors
g = build_gnkm(4, 2, 6)
col = EdgeColoring(g.graph, 4, tuple(u for u, v in g.graph.edges))
A, B = extract_star_coloring(g, col, 3, 3)
print("star coloring on A =", A, "B =", B, is_star_coloring(col, A, B))

# a small relaxed G*; the canonical sequences are far larger
gs = build_gstar(3, 2, 2, {"n": [3, 3], "m": [2, 2]}, relax=True)
o = gs.orientation()
o.check()
print(f"G*: {gs.graph.n} vertices, canonical = {gs.canonical}, max in-degree {o.max_indegree},",
      "m1 =", m1_density(gs.graph).value)
for ell, r in [(3, 2), (4, 3), (5, 4), (7, 6)]:
    print(f"k for l={ell}, r={r}:", gstar_k_formula(ell, r))
