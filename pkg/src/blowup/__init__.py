"""Exact-arithmetic blowup polynomials of graphs and finite metrics.

The package computes the multi-affine blowup polynomial of a graph (or of
a raw integer distance matrix), decides the complete-multipartite
equivalence battery exactly, certifies real-stability by seeded exact
sampling, and builds the associated delta-matroid families.  Everything is
integer or rational arithmetic; no floating point touches any result.
"""

from .errors import (
    BlowupError,
    CapacityError,
    DisconnectedGraphError,
    ParseError,
    RecoveryError,
    ValidationError,
)
from .graphs import (
    DistMatrix,
    Graph,
    are_isomorphic,
    bits,
    blowup,
    blowup_distance_matrix,
    collapse_twins,
    complete_graph,
    complete_multipartite_partition,
    cycle_graph,
    distance_matrix,
    enumerate_connected_graphs,
    enumerate_trees,
    induced_subgraph,
    mask_of,
    parse_edge_list,
    parse_graph6,
    path_graph,
    star_graph,
    steiner_tree_vertices,
)
from .linalg import (
    IntPoly,
    all_principal_minors,
    char_poly,
    determinant,
    determinant_rational,
    inertia,
    is_psd,
    principal_minor,
    sturm_is_real_rooted,
)
from .matroids import (
    FamilyDiff,
    SetFamily,
    compare_families,
    is_delta_matroid,
    path_family,
    support_family,
    tree_blowup_family,
    twin_obstruction_family,
)
from .polynomials import (
    HomogPoly,
    MultiAffinePoly,
    SymmetrySet,
    blowup_polynomial,
    complete_graph_closed_form,
    graph_blowup_polynomial,
    near_complete_closed_form,
    near_complete_graph,
    polynomial_symmetries,
    recover_graph,
    verify_blowup_determinant,
)
from .stability import (
    EquivalenceReport,
    StabilityVerdict,
    StronglyRayleighVerdict,
    equivalence_report,
    homogenized_line_check,
    line_realroot_check,
    lorentzian_check,
    rayleigh_sample_check,
    spectrum_correspondence_check,
    strongly_rayleigh_normalized_check,
)

__version__ = "0.1.0"
