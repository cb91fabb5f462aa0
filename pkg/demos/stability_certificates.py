"""Exact sampled certificates for real-stability.

Deciding real-stability symbolically is out of desk scope, but exact
arithmetic makes sampling one-sided: every reported violation is a proof.
Blowup polynomials pass both certificates everywhere we look; a planted
non-stable polynomial is rejected immediately with an exact witness.

Run:  python demos/stability_certificates.py
"""

from blowup import (
    MultiAffinePoly,
    cycle_graph,
    graph_blowup_polynomial,
    line_realroot_check,
    path_graph,
    rayleigh_sample_check,
    sturm_is_real_rooted,
)

for name, g in [("5-cycle", cycle_graph(5)), ("9-path", path_graph(9))]:
    p = graph_blowup_polynomial(g)
    rayleigh = rayleigh_sample_check(p, seed=2024, count=100)
    line = line_realroot_check(p, seed=2024, count=100)
    print(f"{name}: {rayleigh.samples_checked} Rayleigh checks passed: {rayleigh.passed}; "
          f"{line.samples_checked} line restrictions real-rooted: {line.passed}")
    print(f"  univariate specialization real-rooted: "
          f"{sturm_is_real_rooted(p.univariate())}")

print()
print("planting n1*n2 + 1, which is not real-stable:")
planted = MultiAffinePoly(2, {0b11: 1, 0b00: 1})
verdict = rayleigh_sample_check(planted, seed=2024, count=100)
violation = verdict.first_violation
print(f"  rejected after {verdict.samples_checked} checks;")
print(f"  at the point {tuple(map(str, violation['point']))} the Rayleigh "
      f"difference is exactly {violation['value']}")
