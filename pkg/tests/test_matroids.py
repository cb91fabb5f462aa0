import pytest

from blowup import graphs, linalg
from blowup.errors import CapacityError, ValidationError
from blowup.graphs import mask_of
from blowup.matroids import (
    SetFamily,
    compare_families,
    is_delta_matroid,
    path_family,
    support_family,
    tree_blowup_family,
    twin_obstruction_family,
)
from blowup.polynomials import graph_blowup_polynomial
from blowup.reproduce import failing_twin_graph


def test_support_family_examples():
    k3 = support_family(graph_blowup_polynomial(graphs.complete_graph(3)))
    assert len(k3) == 8  # every minor of the complete-graph metric is nonzero
    p4 = support_family(graph_blowup_polynomial(graphs.path_graph(4)))
    excluded = {mask_of([0, 2]), mask_of([1, 3]), mask_of([0, 1, 2]), mask_of([1, 2, 3])}
    assert p4.feasible == frozenset(set(range(16)) - excluded)
    p9 = support_family(graph_blowup_polynomial(graphs.path_graph(9)))
    assert (1 << 9) - 1 not in p9.feasible


def test_support_matches_nonsingular_minors(corpus6):
    for g in corpus6:
        m = graphs.distance_matrix(g).plus_two_identity()
        table = linalg.all_principal_minors(m)
        fam = support_family(graph_blowup_polynomial(g))
        assert fam.feasible == frozenset(mask for mask, det in table.items() if det)


def test_empty_set_is_feasible_everywhere(corpus6):
    for g in corpus6[:30]:
        assert 0 in support_family(graph_blowup_polynomial(g))
    for t in graphs.enumerate_trees(6):
        assert 0 in tree_blowup_family(t)
    assert 0 in path_family(5)


def test_is_delta_matroid_basics():
    assert is_delta_matroid(SetFamily(2, frozenset(range(4)))) is None
    with pytest.raises(ValidationError):
        is_delta_matroid(SetFamily(2, frozenset()))
    assert is_delta_matroid(SetFamily(2, frozenset({0, 1}))) == ("uncovered", 1)
    # {} and {0,1,2} cannot exchange a single element
    w = is_delta_matroid(SetFamily(3, frozenset({0, 0b111})))
    assert w == ("exchange", 0, 0b111, 0)


def test_is_delta_matroid_witness_is_lexicographic_first():
    fam = SetFamily(3, frozenset({0, 0b110, 0b111}))
    # (A=0, B=6) exchanges fine via the double flip; (A=0, B=7) is the
    # first failure, at its smallest element
    assert is_delta_matroid(fam) == ("exchange", 0, 0b111, 0)


def test_support_families_are_delta_matroids_small(corpus6):
    for g in corpus6:
        if g.k > 5:
            continue
        assert is_delta_matroid(support_family(graph_blowup_polynomial(g))) is None


def test_tree_blowup_family_examples():
    for k in range(2, 9):
        fam = tree_blowup_family(graphs.path_graph(k))
        assert compare_families(fam, path_family(k)).equal
    # 9-path: the pattern family strictly contains the support
    sup9 = support_family(graph_blowup_polynomial(graphs.path_graph(9)))
    tree9 = tree_blowup_family(graphs.path_graph(9))
    diff = compare_families(sup9, tree9)
    assert not diff.only_in_a and diff.only_in_b
    star = tree_blowup_family(graphs.star_graph(3))
    assert star.feasible == frozenset({0, 1, 2, 4, 8, 3, 5, 9})
    with pytest.raises(ValidationError):
        tree_blowup_family(graphs.cycle_graph(4))


def test_path_family_examples():
    f3 = path_family(3)
    assert f3.feasible == frozenset(set(range(8)) - {0b101, 0b111})
    assert path_family(2).feasible == frozenset(range(4))
    assert len(path_family(5)) == 32 - 6
    for k in range(1, 11):
        assert is_delta_matroid(path_family(k)) is None


def test_tree_families_are_delta_matroids():
    for n in range(1, 8):
        for t in graphs.enumerate_trees(n):
            assert is_delta_matroid(tree_blowup_family(t)) is None


def test_twin_obstruction_on_trees_matches_tree_family():
    for n in range(2, 8):
        for t in graphs.enumerate_trees(n):
            base = tree_blowup_family(t)
            assert compare_families(twin_obstruction_family(t, 1), base).equal
            assert compare_families(twin_obstruction_family(t, 2), base).equal


def test_twin_obstruction_failing_graph():
    g = failing_twin_graph()
    for kind in (1, 2):
        fam = twin_obstruction_family(g, kind)
        witness = is_delta_matroid(fam)
        assert witness is not None and witness[0] == "exchange"


def test_twin_obstruction_complete_graph_is_free():
    fam = twin_obstruction_family(graphs.complete_graph(3), 1)
    assert fam.feasible == frozenset(range(8))


def test_twin_obstruction_validation():
    with pytest.raises(ValidationError):
        twin_obstruction_family(graphs.complete_graph(3), 3)


def test_twin_obstruction_capacity(monkeypatch):
    monkeypatch.setenv("BLOWUP_MAX_K", "4")
    with pytest.raises(CapacityError):
        twin_obstruction_family(graphs.path_graph(5), 1)


def test_kind2_infeasible_implies_zero_coefficient(corpus6):
    # forward direction only; the converse fails on long paths
    for g in corpus6:
        p = graph_blowup_polynomial(g)
        fam = twin_obstruction_family(g, 2)
        for mask in range(1 << g.k):
            if mask not in fam.feasible:
                assert mask not in p.coeffs


def test_converse_fails_on_the_nine_path():
    # the full vertex set of the 9-path has zero coefficient but is feasible
    # in both generalized families (no twin obstruction exists)
    p9 = graphs.path_graph(9)
    full = (1 << 9) - 1
    assert full not in graph_blowup_polynomial(p9).coeffs
    assert full in twin_obstruction_family(p9, 2)


def test_compare_families():
    a = SetFamily(3, frozenset({0, 1, 2}))
    b = SetFamily(3, frozenset({0, 2, 4}))
    diff = compare_families(a, b)
    assert diff.only_in_a == (1,) and diff.only_in_b == (4,) and not diff.equal
    assert compare_families(a, a).equal
    with pytest.raises(ValidationError):
        compare_families(a, SetFamily(2, frozenset({0})))


def test_family_serialization_round_trip():
    fam = support_family(graph_blowup_polynomial(graphs.cycle_graph(5)))
    doc = fam.to_json_dict()
    assert doc["feasible"] == sorted(fam.feasible)
    assert SetFamily.from_json(fam.to_json()) == fam
