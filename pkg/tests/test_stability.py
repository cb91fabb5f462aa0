import random
from fractions import Fraction

import pytest

from blowup import graphs, linalg, stability
from blowup.errors import ValidationError
from blowup.polynomials import MultiAffinePoly, graph_blowup_polynomial
from blowup.stability import (
    equivalence_report,
    homogenized_line_check,
    line_realroot_check,
    lorentzian_check,
    rayleigh_sample_check,
    spectrum_correspondence_check,
    strongly_rayleigh_normalized_check,
)

PLANTED = MultiAffinePoly(2, {0b11: 1, 0: 1})  # n1*n2 + 1, not real-stable


def test_rayleigh_passes_on_blowup_polynomials():
    for g in [graphs.path_graph(3), graphs.cycle_graph(4), graphs.complete_graph(4)]:
        v = rayleigh_sample_check(graph_blowup_polynomial(g), seed=5, count=50)
        assert v.passed and v.first_violation is None
        assert v.samples_checked == 50 * g.k * (g.k - 1) // 2


def test_rayleigh_rejects_planted_counterexample():
    v = rayleigh_sample_check(PLANTED, seed=5, count=10)
    assert not v.passed
    assert v.first_violation["value"] == Fraction(-1)
    assert (v.first_violation["i"], v.first_violation["j"]) == (0, 1)


def test_rayleigh_on_long_path():
    p9 = graph_blowup_polynomial(graphs.path_graph(9))
    assert rayleigh_sample_check(p9, seed=3, count=25).passed


def test_rayleigh_determinism_and_validation():
    p = graph_blowup_polynomial(graphs.cycle_graph(4))
    a = rayleigh_sample_check(p, seed=11, count=20)
    b = rayleigh_sample_check(p, seed=11, count=20)
    assert a == b
    with pytest.raises(ValidationError):
        rayleigh_sample_check(p, seed=1, count=0)


def test_line_check_passes_on_blowup_polynomials():
    for g in [graphs.complete_graph(3), graphs.cycle_graph(4), graphs.path_graph(5)]:
        v = line_realroot_check(graph_blowup_polynomial(g), seed=9, count=50)
        assert v.passed and v.skipped == 0


def test_line_check_rejects_planted_counterexample():
    v = line_realroot_check(PLANTED, seed=1, count=200)
    assert not v.passed
    assert "direction" in v.first_violation


def test_line_check_skips_constant_restrictions():
    constant = MultiAffinePoly(1, {0: 5})
    v = line_realroot_check(constant, seed=2, count=7)
    assert v.passed and v.skipped == 7 and v.samples_checked == 0


def test_line_restriction_exactness():
    # the scaled restriction evaluated at integer t matches the polynomial
    p = graph_blowup_polynomial(graphs.path_graph(4))
    rng = random.Random(6)
    q, ys, ws = 2, [3, -5, 7, 1], [1, 2, 1, 3]
    restr = stability._line_restriction(p.coeffs, 4, q, ys, ws)
    for t in range(-3, 4):
        xs = [Fraction(y + t * w, q) for y, w in zip(ys, ws)]
        assert restr.evaluate(t) == p.evaluate(xs) * q**4


def test_homogenized_line_check():
    hc4 = graph_blowup_polynomial(graphs.cycle_graph(4)).homogenize()
    assert homogenized_line_check(hc4, seed=4, count=30).passed
    hk3 = graph_blowup_polynomial(graphs.complete_graph(3)).homogenize()
    assert homogenized_line_check(hk3, seed=4, count=30).passed


def test_lorentzian_examples():
    assert lorentzian_check(graph_blowup_polynomial(graphs.complete_graph(2)).homogenize())
    assert lorentzian_check(graph_blowup_polynomial(graphs.cycle_graph(4)).homogenize())
    assert not lorentzian_check(graph_blowup_polynomial(graphs.path_graph(4)).homogenize())
    with pytest.raises(ValidationError):
        lorentzian_check(graph_blowup_polynomial(graphs.Graph(1, [])).homogenize())


def test_lorentzian_invariant_under_automorphism():
    c6 = graphs.cycle_graph(6)
    h = graph_blowup_polynomial(c6).homogenize()
    base = lorentzian_check(h)
    # rotate the vertex variables by one step
    rot = [(i + 1) % 6 for i in range(6)]
    permuted = {}
    for mask, c in h.coeffs.items():
        new = 0
        for v in graphs.bits(mask):
            new |= 1 << rot[v]
        permuted[new] = c
    from blowup.polynomials import HomogPoly

    assert lorentzian_check(HomogPoly(6, permuted)) == base


def test_strongly_rayleigh_examples():
    ok = strongly_rayleigh_normalized_check(
        graph_blowup_polynomial(graphs.cycle_graph(4)), seed=8, count=30
    )
    assert ok.exact_passed and ok.passed
    bad = strongly_rayleigh_normalized_check(
        graph_blowup_polynomial(graphs.path_graph(4)), seed=8, count=30
    )
    assert not bad.reflected_nonneg and not bad.passed
    k3 = strongly_rayleigh_normalized_check(
        graph_blowup_polynomial(graphs.complete_graph(3)), seed=8, count=30
    )
    assert k3.passed


def test_equivalence_report_examples():
    c4 = equivalence_report(graphs.cycle_graph(4), seed=7, samples=20)
    assert c4.consistent
    assert c4.coeffs_nonneg and c4.psd and c4.multipartite and c4.lorentzian
    p4 = equivalence_report(graphs.path_graph(4), seed=7, samples=20)
    assert p4.consistent
    assert not (p4.coeffs_nonneg or p4.psd or p4.multipartite or p4.lorentzian)
    star = equivalence_report(graphs.star_graph(3), seed=7, samples=20)
    assert star.consistent and star.multipartite


def test_equivalence_report_single_vertex():
    rep = equivalence_report(graphs.Graph(1, []), seed=7, samples=5)
    assert rep.consistent and rep.lorentzian and rep.psd and rep.multipartite


def test_report_serialization():
    rep = equivalence_report(graphs.cycle_graph(4), seed=7, samples=5)
    doc = rep.to_json_dict()
    assert doc["seed"] == 7 and doc["samples"] == 5
    assert set(doc) >= {
        "coeffs_nonneg", "psd", "multipartite", "lorentzian",
        "homog_stable_sampled", "strongly_rayleigh_sampled", "consistent",
    }
    verdict = rayleigh_sample_check(PLANTED, seed=5, count=10).to_json_dict()
    assert verdict["passed"] is False and "first_violation" in verdict


def test_spectrum_correspondence_by_hand():
    # u_{K2} = 3n^2 - 8n + 4 and chi(x) = x^2 - 1:
    # (-n)^2 * ((2/n - 2)^2 - 1) clears to 3n^2 - 8n + 4
    assert spectrum_correspondence_check(graphs.complete_graph(2))
    # degree drop: u_{P3} has degree 2 < 3, matching det M_{P3} = 0
    assert spectrum_correspondence_check(graphs.path_graph(3))


def test_spectrum_correspondence_small_corpus():
    for n in range(1, 6):
        for g in graphs.enumerate_connected_graphs(n, dedup=True):
            assert spectrum_correspondence_check(g)


def test_univariate_real_rooted_small_corpus():
    for n in range(1, 6):
        for g in graphs.enumerate_connected_graphs(n, dedup=True):
            assert linalg.sturm_is_real_rooted(graph_blowup_polynomial(g).univariate())
