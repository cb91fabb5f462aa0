"""Stability certificates and the complete-multipartite equivalence battery.

Real-stability of a blowup polynomial is certified, not decided: sampled
checks evaluate the Rayleigh difference and line restrictions at seeded
rational points in exact arithmetic, so a reported violation is a proof of
failure and can never be a rounding artifact.  The Lorentzian property of
the homogenization, by contrast, is decided exactly through integer Hessian
inertia, as are positive semidefiniteness and multipartiteness.

Sampling draws coordinates y/q with one small common denominator q per
sample, so every hot loop runs on plain integers.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement

from . import graphs, linalg
from .errors import ValidationError
from .graphs import Graph
from .linalg import IntPoly
from .polynomials import HomogPoly, MultiAffinePoly, graph_blowup_polynomial

DEFAULT_SAMPLES = 200
DEFAULT_BOX = 10


@dataclass(frozen=True)
class StabilityVerdict:
    """Outcome of a sampled certificate.

    passed is False exactly when first_violation is present; skipped counts
    degenerate samples (constant line restrictions) that prove nothing.
    """

    passed: bool
    samples_checked: int
    skipped: int = 0
    first_violation: dict | None = None

    def to_json_dict(self) -> dict:
        doc = {
            "passed": self.passed,
            "samples_checked": self.samples_checked,
            "skipped": self.skipped,
        }
        if self.first_violation is not None:
            doc["first_violation"] = {
                key: str(val) for key, val in self.first_violation.items()
            }
        return doc


def _sample_scaled(rng: random.Random, count: int, box: int):
    """One sample of `count` rationals with a shared denominator q.

    Returns (q, numerators); each coordinate is y/q in [-box, box].
    """
    q = rng.randint(1, 3)
    return q, [rng.randint(-box * q, box * q) for _ in range(count)]


def _sample_line(rng: random.Random, count: int, box: int):
    """A rational base point in [-box, box]^count and a positive direction
    in (0, box]^count, sharing one denominator q."""
    q = rng.randint(1, 3)
    ys = [rng.randint(-box * q, box * q) for _ in range(count)]
    ws = [rng.randint(1, box * q) for _ in range(count)]
    return q, ys, ws


def _subset_products(ys, k: int) -> list[int]:
    """prod_{i in S} ys[i] for every bitmask S, by one-bit extension."""
    prods = [1] * (1 << k)
    for mask in range(1, 1 << k):
        low = mask & -mask
        prods[mask] = prods[mask ^ low] * ys[low.bit_length() - 1]
    return prods


def rayleigh_sample_check(
    p: MultiAffinePoly,
    seed: int,
    count: int = DEFAULT_SAMPLES,
    box: int = DEFAULT_BOX,
) -> StabilityVerdict:
    """Sampled Rayleigh certificate for a multi-affine polynomial.

    At each seeded rational point x and pair i < j, checks
    d_i(p) * d_j(p) - p * d_i d_j(p) >= 0 exactly.  Writing
    p = A + B n_i + C n_j + D n_i n_j in the remaining variables, the
    difference collapses to B*C - A*D, so only four subset sums per pair
    are needed, all in scaled integer arithmetic.
    """
    if count < 1:
        raise ValidationError("need at least one sample")
    rng = random.Random(seed)
    k = p.k
    coeffs = p.coeffs
    checked = 0
    for _ in range(count):
        q, ys = _sample_scaled(rng, k, box)
        prods = _subset_products(ys, k)
        qpow = [q**e for e in range(k + 1)]
        for i, j in combinations(range(k), 2):
            bi, bj = 1 << i, 1 << j
            rest = ((1 << k) - 1) ^ bi ^ bj
            a = b = c = d = 0
            sub = rest
            while True:
                w = prods[sub] * qpow[k - 2 - sub.bit_count()]
                ca = coeffs.get(sub)
                if ca:
                    a += ca * w
                cb = coeffs.get(sub | bi)
                if cb:
                    b += cb * w
                cc = coeffs.get(sub | bj)
                if cc:
                    c += cc * w
                cd = coeffs.get(sub | bi | bj)
                if cd:
                    d += cd * w
                if sub == 0:
                    break
                sub = (sub - 1) & rest
            checked += 1
            delta = b * c - a * d
            if delta < 0:
                return StabilityVerdict(
                    passed=False,
                    samples_checked=checked,
                    first_violation={
                        "i": i,
                        "j": j,
                        "point": tuple(Fraction(y, q) for y in ys),
                        "value": Fraction(delta, q ** (2 * (k - 2))),
                    },
                )
    return StabilityVerdict(passed=True, samples_checked=checked)


def _line_restriction(coeffs: dict, k: int, q: int, ys, ws) -> IntPoly:
    """Integer coefficients of q^k * p((ys + t*ws) / q) as a polynomial in t."""
    lin = [None] * (1 << k)
    lin[0] = [1]
    for mask in range(1, 1 << k):
        low = mask & -mask
        v = low.bit_length() - 1
        prev = lin[mask ^ low]
        cur = [0] * (len(prev) + 1)
        y, w = ys[v], ws[v]
        for e, cf in enumerate(prev):
            cur[e] += cf * y
            cur[e + 1] += cf * w
        lin[mask] = cur
    out = [0] * (k + 1)
    for mask, c in coeffs.items():
        scale = c * q ** (k - mask.bit_count())
        for e, cf in enumerate(lin[mask]):
            out[e] += scale * cf
    return IntPoly(out)


def line_realroot_check(
    p: MultiAffinePoly,
    seed: int,
    count: int = DEFAULT_SAMPLES,
    box: int = DEFAULT_BOX,
) -> StabilityVerdict:
    """Sampled line certificate: t -> p(x + t*v) must be real-rooted.

    x is a seeded rational point in [-box, box]^k and v a positive rational
    direction in (0, box]^k; the restriction is built exactly and tested
    with a Sturm chain.  Constant restrictions prove nothing and are
    skipped (counted separately).
    """
    if count < 1:
        raise ValidationError("need at least one sample")
    rng = random.Random(seed)
    k = p.k
    checked = 0
    skipped = 0
    for _ in range(count):
        q, ys, ws = _sample_line(rng, k, box)
        restriction = _line_restriction(p.coeffs, k, q, ys, ws)
        if restriction.degree <= 0:
            skipped += 1
            continue
        checked += 1
        if not linalg.sturm_is_real_rooted(restriction):
            return StabilityVerdict(
                passed=False,
                samples_checked=checked,
                skipped=skipped,
                first_violation={
                    "point": tuple(Fraction(y, q) for y in ys),
                    "direction": tuple(Fraction(w, q) for w in ws),
                },
            )
    return StabilityVerdict(passed=True, samples_checked=checked, skipped=skipped)


def homogenized_line_check(
    h: HomogPoly,
    seed: int,
    count: int = DEFAULT_SAMPLES,
    box: int = DEFAULT_BOX,
) -> StabilityVerdict:
    """Sampled line certificate for the homogenized polynomial in z0..zk."""
    if count < 1:
        raise ValidationError("need at least one sample")
    rng = random.Random(seed)
    k = h.k
    checked = 0
    skipped = 0
    for _ in range(count):
        q, ys, ws = _sample_line(rng, k + 1, box)
        z0_pows = [IntPoly([1])]
        z0_lin = IntPoly([ys[0], ws[0]])
        for _e in range(k):
            z0_pows.append(z0_pows[-1] * z0_lin)
        lin = [None] * (1 << k)
        lin[0] = IntPoly([1])
        for mask in range(1, 1 << k):
            low = mask & -mask
            v = low.bit_length() - 1
            lin[mask] = lin[mask ^ low] * IntPoly([ys[v + 1], ws[v + 1]])
        total = IntPoly()
        for mask, c in h.coeffs.items():
            total = total + c * (z0_pows[k - mask.bit_count()] * lin[mask])
        if total.degree <= 0:
            skipped += 1
            continue
        checked += 1
        if not linalg.sturm_is_real_rooted(total):
            return StabilityVerdict(
                passed=False,
                samples_checked=checked,
                skipped=skipped,
                first_violation={
                    "point": tuple(Fraction(y, q) for y in ys),
                    "direction": tuple(Fraction(w, q) for w in ws),
                },
            )
    return StabilityVerdict(passed=True, samples_checked=checked, skipped=skipped)


# ---------------------------------------------------------------------------
# exact decisions
# ---------------------------------------------------------------------------

def lorentzian_check(h: HomogPoly) -> bool:
    """Exact Lorentzian decision for the homogenized blowup polynomial.

    Requires all coefficients nonnegative, and for every multiset of k-2
    derivative indices in 0..k whose derivative is not identically zero,
    the constant Hessian must have exactly one positive eigenvalue (by
    exact inertia).  Identically-zero derivatives are skipped: any index
    repeated among z1..zk kills the multi-affine part, and blowups with
    twin vertices make some surviving Hessians singular, so demanding
    nonsingularity would reject honest Lorentzian polynomials.
    """
    k = h.k
    if k < 2:
        raise ValidationError("Lorentzian check needs degree >= 2")
    if any(c < 0 for c in h.coeffs.values()):
        return False
    for alpha in combinations_with_replacement(range(k + 1), k - 2):
        hess = h.hessian_of_derivative(alpha)
        if all(not any(row) for row in hess):
            continue
        n_plus, _, _ = linalg.inertia(hess)
        if n_plus != 1:
            return False
    return True


@dataclass(frozen=True)
class StronglyRayleighVerdict:
    """Exact normalization checks plus a sampled stability certificate."""

    sign_positive: bool
    reflected_nonneg: bool
    sums_to_one: bool
    stability: StabilityVerdict

    @property
    def exact_passed(self) -> bool:
        return self.sign_positive and self.reflected_nonneg and self.sums_to_one

    @property
    def passed(self) -> bool:
        return self.exact_passed and self.stability.passed

    def to_json_dict(self) -> dict:
        return {
            "sign_positive": self.sign_positive,
            "reflected_nonneg": self.reflected_nonneg,
            "sums_to_one": self.sums_to_one,
            "stability": self.stability.to_json_dict(),
            "passed": self.passed,
        }


def strongly_rayleigh_normalized_check(
    p: MultiAffinePoly,
    seed: int,
    count: int = DEFAULT_SAMPLES,
    box: int = DEFAULT_BOX,
) -> StronglyRayleighVerdict:
    """Is the reflected, normalized polynomial a probability-generating one?

    Exactly checks (-1)^k * p(-1,...,-1) > 0, that every coefficient of
    p(-z1,...,-zk) / p(-1,...,-1) is nonnegative, and that they sum to 1
    (exact rationals).  Stability of the reflection is then certified by
    the sampled Rayleigh check.
    """
    reflected = p.reflect()
    total = sum(reflected.coeffs.values())
    sign_positive = ((-1) ** p.k) * total > 0
    if total:
        reflected_nonneg = all(
            (c > 0) == (total > 0) for c in reflected.coeffs.values()
        )
        sums_to_one = sum(Fraction(c, total) for c in reflected.coeffs.values()) == 1
    else:
        reflected_nonneg = False
        sums_to_one = False
    stability = rayleigh_sample_check(reflected, seed, count=count, box=box)
    return StronglyRayleighVerdict(sign_positive, reflected_nonneg, sums_to_one, stability)


# ---------------------------------------------------------------------------
# the equivalence battery
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class EquivalenceReport:
    """Joint verdict on the six equivalent multipartite characterizations.

    The four exact flags must agree pairwise on every connected graph;
    sampled flags may only fail when the exact flags are false (a sampled
    failure against exact truth would be an implementation bug), and
    `consistent` records both conditions.
    """

    coeffs_nonneg: bool
    psd: bool
    multipartite: bool
    lorentzian: bool
    homog_stable_sampled: bool
    strongly_rayleigh_sampled: bool
    consistent: bool
    seed: int
    samples: int

    def to_json_dict(self) -> dict:
        return {
            "coeffs_nonneg": self.coeffs_nonneg,
            "psd": self.psd,
            "multipartite": self.multipartite,
            "lorentzian": self.lorentzian,
            "homog_stable_sampled": self.homog_stable_sampled,
            "strongly_rayleigh_sampled": self.strongly_rayleigh_sampled,
            "consistent": self.consistent,
            "seed": self.seed,
            "samples": self.samples,
        }


def equivalence_report(
    g: Graph,
    seed: int,
    samples: int = DEFAULT_SAMPLES,
    box: int = DEFAULT_BOX,
) -> EquivalenceReport:
    """Run all six multipartite characterizations on one graph.

    Exact: nonnegative homogenized coefficients, positive semidefiniteness
    of D + 2*Id, complete multipartiteness, and the Lorentzian Hessian
    battery.  Sampled: real-stability of the homogenization and the
    strongly-Rayleigh property of the reflected normalization.
    """
    g.require_connected("equivalence_report")
    d = graphs.distance_matrix(g)
    p = graph_blowup_polynomial(g)
    h = p.homogenize()
    coeffs_nonneg = all(c >= 0 for c in h.coeffs.values())
    psd = linalg.is_psd(d.plus_two_identity())
    multipartite = graphs.complete_multipartite_partition(g) is not None
    if g.k >= 2:
        lorentzian = lorentzian_check(h)
    else:
        # Degree < 2: no Hessian battery exists; nonnegative coefficients
        # are the whole Lorentzian condition.
        lorentzian = coeffs_nonneg
    homog_stable = homogenized_line_check(h, seed, count=samples, box=box)
    strongly_rayleigh = strongly_rayleigh_normalized_check(p, seed, count=samples, box=box)
    exact = [coeffs_nonneg, psd, multipartite, lorentzian]
    consistent = len(set(exact)) == 1 and not (
        all(exact) and not (homog_stable.passed and strongly_rayleigh.passed)
    )
    return EquivalenceReport(
        coeffs_nonneg=coeffs_nonneg,
        psd=psd,
        multipartite=multipartite,
        lorentzian=lorentzian,
        homog_stable_sampled=homog_stable.passed,
        strongly_rayleigh_sampled=strongly_rayleigh.passed,
        consistent=consistent,
        seed=seed,
        samples=samples,
    )


def spectrum_correspondence_check(g: Graph) -> bool:
    """Exact identity linking the univariate polynomial to the distance spectrum.

    Verifies u_G(n) == (-n)^k * chi(2/n - 2) with denominators cleared,
    i.e. u_G == (-1)^k * sum_j a_j * (2 - 2n)^j * n^(k - j) where the a_j
    are the characteristic polynomial coefficients of the distance matrix.
    This polynomial identity implies that the nonzero roots of u_G are
    exactly the n with 2/n - 2 an eigenvalue, with matching multiplicity.
    """
    g.require_connected("spectrum_correspondence_check")
    k = g.k
    d = graphs.distance_matrix(g)
    u = graph_blowup_polynomial(g).univariate()
    chi = linalg.char_poly([list(row) for row in d.rows])
    base = IntPoly([2, -2])
    power = IntPoly([1])
    rhs = IntPoly()
    for j in range(k + 1):
        a = chi[j]
        if a:
            rhs = rhs + a * power.shift(k - j)
        if j < k:
            power = power * base
    if k % 2:
        rhs = -rhs
    return u == rhs
