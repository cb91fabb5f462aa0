"""Build blowup polynomials of small graphs and check the determinant identity.

Run:  python demos/blowup_polynomial_basics.py
"""

from blowup import (
    blowup,
    complete_graph,
    cycle_graph,
    determinant,
    distance_matrix,
    graph_blowup_polynomial,
    path_graph,
    verify_blowup_determinant,
)

print("The blowup polynomial of the single edge:")
p_edge = graph_blowup_polynomial(complete_graph(2))
print("  p =", p_edge.pretty())
print("  at (1,1) it evaluates to det of the distance matrix:", p_edge.evaluate((1, 1)))
print()

print("The 3-path: note the vanishing monomials n1*n3 and n1*n2*n3 --")
print("the two end vertices are copies of one vertex of the edge, so the")
print("corresponding principal minors are singular.")
p_path = graph_blowup_polynomial(path_graph(3))
print("  p =", p_path.pretty())
print("  u(n) = p(n,n,n) has coefficients", list(p_path.univariate().coeffs))
print()

print("Blowing up vertices multiplies the determinant by powers of -2:")
print("  det D_{G[n]} = (-2)^(sum n_v - k) * p_G(n)")
for g, sizes, name in [
    (complete_graph(2), (2, 2), "edge -> 4-cycle"),
    (complete_graph(2), (3, 2), "edge -> K_{3,2}"),
    (path_graph(3), (2, 1, 2), "3-path, doubled ends"),
]:
    big = blowup(g, sizes)
    lhs = determinant(distance_matrix(big).rows)
    print(f"  {name}: sizes {sizes}, det = {lhs}, identity holds:",
          verify_blowup_determinant(g, sizes))
print()

print("The 4-cycle is itself a blowup of the edge, so its polynomial has")
print("total degree 2 even though it has 4 variables:")
p_c4 = graph_blowup_polynomial(cycle_graph(4))
print("  p =", p_c4.pretty())
print("  max monomial size:", max(m.bit_count() for m in p_c4.coeffs))
