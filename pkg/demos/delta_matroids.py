"""Delta-matroids from polynomial supports, and where the tree rule breaks.

The monomial support of a blowup polynomial always satisfies the symmetric
exchange axiom.  On trees there is a second, purely combinatorial family
(the Steiner-leaf rule) which agrees with the support on paths up to 8
vertices and then departs; its natural generalizations to all graphs stop
being delta-matroids, witnessed on a specific 7-vertex graph.

Run:  python demos/delta_matroids.py
"""

from blowup import (
    bits,
    compare_families,
    determinant,
    distance_matrix,
    graph_blowup_polynomial,
    is_delta_matroid,
    path_graph,
    star_graph,
    support_family,
    tree_blowup_family,
    twin_obstruction_family,
)
from blowup.reproduce import failing_twin_graph

print("support of the 4-path polynomial (feasible = surviving monomials):")
fam = support_family(graph_blowup_polynomial(path_graph(4)))
infeasible = sorted(set(range(16)) - fam.feasible)
print("  infeasible subsets:", [sorted(v + 1 for v in bits(m)) for m in infeasible])
print("  exchange axiom witness:", is_delta_matroid(fam))
print()

print("the Steiner-leaf family of a path excludes exactly the patterns")
print("{i, i+2} and {i, i+1, i+2}; it matches the support up to 8 vertices:")
for k in (6, 7, 8, 9):
    sup = support_family(graph_blowup_polynomial(path_graph(k)))
    rule = tree_blowup_family(path_graph(k))
    diff = compare_families(sup, rule)
    extra = [sorted(v + 1 for v in bits(m)) for m in diff.only_in_b]
    print(f"  k={k}: families equal: {diff.equal}"
          + (f", support misses {extra}" if extra else ""))
m9 = distance_matrix(path_graph(9)).plus_two_identity()
print("  the 9-path departure comes from det(D + 2 Id) =", determinant(m9))
print()

print("on a star, any two leaves share a parent, so feasible sets are tiny:")
star_fam = tree_blowup_family(star_graph(4))
print(" ", sorted([sorted(bits(m)) for m in star_fam.feasible], key=lambda s: (len(s), s)))
print()

print("generalizing the tree rule via twins in connected (kind 1) or")
print("isometric (kind 2) induced supersets fails on this 7-vertex graph:")
g = failing_twin_graph()
print("  edges:", g.edges())
for kind in (1, 2):
    fam = twin_obstruction_family(g, kind)
    witness = is_delta_matroid(fam)
    _, a, b, x = witness
    print(f"  kind {kind}: exchange fails for A={sorted(bits(a))}, "
          f"B={sorted(bits(b))}, x={x}")
