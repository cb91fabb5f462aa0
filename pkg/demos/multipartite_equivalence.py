"""Six equivalent faces of complete multipartiteness.

For a connected graph the following agree: nonnegative homogenized
coefficients, positive semidefiniteness of D + 2*Id, being a complete
multipartite graph, the Lorentzian property of the homogenization, and
(sampled) real-stability of the homogenization / the strongly-Rayleigh
property of the reflected normalization.

Run:  python demos/multipartite_equivalence.py
"""

from blowup import (
    complete_graph,
    complete_multipartite_partition,
    cycle_graph,
    equivalence_report,
    graph_blowup_polynomial,
    inertia,
    path_graph,
    star_graph,
)

for name, g in [
    ("4-cycle", cycle_graph(4)),
    ("4-path", path_graph(4)),
    ("3-leaf star", star_graph(3)),
    ("5-cycle", cycle_graph(5)),
]:
    rep = equivalence_report(g, seed=1, samples=50)
    parts = complete_multipartite_partition(g)
    print(f"{name}:")
    print(f"  complete multipartite: {parts is not None}"
          + (f" with parts {[sorted(p) for p in parts]}" if parts else ""))
    print(f"  coefficients nonneg = {rep.coeffs_nonneg}, metric PSD = {rep.psd}, "
          f"Lorentzian = {rep.lorentzian}")
    print(f"  sampled: homogenization stable = {rep.homog_stable_sampled}, "
          f"strongly Rayleigh = {rep.strongly_rayleigh_sampled}")
    print(f"  consistent: {rep.consistent}")
    print()

print("Under the hood the Lorentzian test takes exact Hessian inertias of")
print("every (k-2)-fold derivative.  For the single edge (k = 2) there is")
print("exactly one Hessian:")
h = graph_blowup_polynomial(complete_graph(2)).homogenize()
hess = h.hessian_of_derivative(())
for row in hess:
    print("   ", row)
print("  inertia (n+, n-, n0):", inertia(hess))
