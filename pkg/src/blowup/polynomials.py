"""The multi-affine blowup polynomial and its homogenization.

A blowup polynomial on k vertices is stored sparsely as a map from vertex
subsets (bitmasks) to integer coefficients; absent means zero, so vanishing
monomials -- the infeasible sets of the support delta-matroid -- are first
class.  The coefficient of the subset S is (-2)^(k-|S|) times the principal
minor of D + 2*Id on S, which is also how construction works: one exact
minor per subset.
"""

from __future__ import annotations

import json
import math
import os
from dataclasses import dataclass
from itertools import permutations

from . import graphs, linalg
from .errors import CapacityError, RecoveryError, ValidationError
from .graphs import DistMatrix, Graph, bits
from .linalg import IntPoly

DEFAULT_MAX_K = 24


def _max_k() -> int:
    """Capacity cap for 2^k coefficient tables; BLOWUP_MAX_K overrides."""
    return int(os.environ.get("BLOWUP_MAX_K", DEFAULT_MAX_K))


class MultiAffinePoly:
    """Polynomial of degree <= 1 in each of k variables, integer coefficients."""

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs: dict):
        if k < 0:
            raise ValidationError("variable count must be nonnegative")
        clean = {}
        for mask, c in coeffs.items():
            mask = int(mask)
            c = int(c)
            if mask >> k:
                raise ValidationError(f"subset {mask} out of range for k={k}")
            if c:
                clean[mask] = c
        self.k = k
        self.coeffs = clean

    def __eq__(self, other):
        return (
            isinstance(other, MultiAffinePoly)
            and self.k == other.k
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.k, tuple(sorted(self.coeffs.items()))))

    def __repr__(self):
        return f"MultiAffinePoly(k={self.k}, {len(self.coeffs)} terms)"

    def __str__(self):
        return self.pretty()

    def pretty(self, names=None) -> str:
        """Human-readable monomial listing in ascending subset order.

        Variables are named n1..nk (1-based) unless names are supplied.
        """
        if names is None:
            names = [f"n{i + 1}" for i in range(self.k)]
        parts = []
        for mask in sorted(self.coeffs):
            c = self.coeffs[mask]
            mono = "*".join(names[v] for v in bits(mask))
            if mono:
                body = f"{abs(c)}*{mono}" if abs(c) != 1 else mono
            else:
                body = str(abs(c))
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts) if parts else "0"

    # -- evaluation and specialisation --------------------------------------

    def evaluate(self, xs):
        """Exact value at the point xs (ints or Fractions), length k."""
        if len(xs) != self.k:
            raise ValidationError(f"need {self.k} coordinates, got {len(xs)}")
        total = 0
        for mask, c in self.coeffs.items():
            term = c
            m = mask
            while m:
                v = (m & -m).bit_length() - 1
                term *= xs[v]
                m &= m - 1
            total += term
        return total

    def univariate(self) -> IntPoly:
        """Set every variable to the same n; coefficient of n^j sums size-j subsets."""
        out = [0] * (self.k + 1)
        for mask, c in self.coeffs.items():
            out[mask.bit_count()] += c
        return IntPoly(out)

    def partial(self, v: int) -> "MultiAffinePoly":
        """Partial derivative in variable v (drops the variable)."""
        bit = 1 << v
        return MultiAffinePoly(
            self.k, {m ^ bit: c for m, c in self.coeffs.items() if m & bit}
        )

    def reflect(self) -> "MultiAffinePoly":
        """Negate every variable: coefficient of S picks up (-1)^|S|."""
        return MultiAffinePoly(
            self.k,
            {m: (c if m.bit_count() % 2 == 0 else -c) for m, c in self.coeffs.items()},
        )

    # -- structure ----------------------------------------------------------

    def homogenize(self) -> "HomogPoly":
        """Homogenize with an extra variable z0 via n_i -> z_i / (-z0).

        The coefficient of z0^(k-|J|) * prod_{j in J} z_j is
        (-1)^(k-|J|) times the coefficient of J here; for a blowup
        polynomial that equals 2^(k-|J|) times the minor on J.
        """
        k = self.k
        out = {}
        for mask, c in self.coeffs.items():
            out[mask] = c if (k - mask.bit_count()) % 2 == 0 else -c
        return HomogPoly(k, out)

    def restrict(self, mask: int) -> "MultiAffinePoly":
        """Blowup polynomial of the restricted metric on the mask vertices.

        Sets the variables outside mask to zero and divides by
        (-2)^(k - |mask|); exact divisibility is asserted, which catches
        misuse on subgraphs with isolated vertices.  The result equals the
        induced subgraph's own blowup polynomial exactly when that
        subgraph is isometrically embedded (its path distances agree with
        the ambient ones); otherwise it is the polynomial of the ambient
        sub-metric, which is the finer invariant.
        """
        if mask >> self.k:
            raise ValidationError("restriction mask out of range")
        kept = bits(mask)
        pos = {v: i for i, v in enumerate(kept)}
        drop = self.k - len(kept)
        scale = (-2) ** drop
        out = {}
        for m, c in self.coeffs.items():
            if m & ~mask:
                continue
            q, r = divmod(c, scale)
            if r:
                raise ValidationError(
                    "restriction is not divisible by the required power of -2; "
                    "the induced subgraph likely has isolated vertices"
                )
            out[sum(1 << pos[v] for v in bits(m))] = q
        return MultiAffinePoly(len(kept), out)

    def hessian_at_zero(self) -> list[list[int]]:
        """Matrix of second partials at the origin: entry (i,j) is the pair coefficient."""
        h = [[0] * self.k for _ in range(self.k)]
        for i in range(self.k):
            for j in range(i + 1, self.k):
                c = self.coeffs.get((1 << i) | (1 << j), 0)
                h[i][j] = h[j][i] = c
        return h

    # -- serialization -------------------------------------------------------

    def to_json_dict(self) -> dict:
        return {
            "k": self.k,
            "coeffs": {str(m): str(self.coeffs[m]) for m in sorted(self.coeffs)},
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, doc: dict) -> "MultiAffinePoly":
        return cls(int(doc["k"]), {int(m): int(c) for m, c in doc["coeffs"].items()})

    @classmethod
    def from_json(cls, text: str) -> "MultiAffinePoly":
        return cls.from_json_dict(json.loads(text))


class HomogPoly:
    """Homogeneous degree-k polynomial in z0..zk, multi-affine in z1..zk.

    Stored as a map from the vertex subset J (bitmask over z1..zk, bit i
    <-> z_{i+1}) to the coefficient of z0^(k-|J|) * prod_{j in J} z_j.
    """

    __slots__ = ("k", "coeffs")

    def __init__(self, k: int, coeffs: dict):
        clean = {}
        for mask, c in coeffs.items():
            mask = int(mask)
            c = int(c)
            if mask >> k:
                raise ValidationError(f"subset {mask} out of range for k={k}")
            if c:
                clean[mask] = c
        self.k = k
        self.coeffs = clean

    def __eq__(self, other):
        return (
            isinstance(other, HomogPoly)
            and self.k == other.k
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        return f"HomogPoly(k={self.k}, {len(self.coeffs)} terms)"

    def evaluate(self, z0, zs):
        if len(zs) != self.k:
            raise ValidationError(f"need {self.k} coordinates, got {len(zs)}")
        total = 0
        for mask, c in self.coeffs.items():
            term = c * z0 ** (self.k - mask.bit_count())
            for v in bits(mask):
                term *= zs[v]
            total += term
        return total

    def hessian_of_derivative(self, indices) -> list[list[int]]:
        """Constant Hessian of the (k-2)-fold derivative selected by indices.

        indices is a multiset of k-2 values in 0..k (0 is the homogenizing
        variable).  The derivative is a quadratic form; entry (i,j) of its
        Hessian is the surviving monomial coefficient times the factorial
        of the z0 multiplicity.  A repeated index >= 1 kills the derivative
        (degree <= 1 in each z_j), giving the zero matrix.
        """
        k = self.k
        if len(indices) != k - 2:
            raise ValidationError(f"need {k - 2} derivative indices, got {len(indices)}")
        z0_mult = 0
        base_mask = 0
        for t in indices:
            if t == 0:
                z0_mult += 1
            else:
                bit = 1 << (t - 1)
                if base_mask & bit:
                    return [[0] * (k + 1) for _ in range(k + 1)]
                base_mask |= bit
        h = [[0] * (k + 1) for _ in range(k + 1)]
        for i in range(k + 1):
            for j in range(i, k + 1):
                mask = base_mask
                m0 = z0_mult
                ok = True
                for t in (i, j):
                    if t == 0:
                        m0 += 1
                    else:
                        bit = 1 << (t - 1)
                        if mask & bit:
                            ok = False
                            break
                        mask |= bit
                if not ok:
                    continue
                c = self.coeffs.get(mask, 0)
                if c:
                    val = c * math.factorial(m0)
                    h[i][j] = h[j][i] = val
        return h


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def blowup_polynomial(d: DistMatrix, max_k: int | None = None) -> MultiAffinePoly:
    """Blowup polynomial of a metric: one exact principal minor per subset.

    The subset S gets coefficient (-2)^(k-|S|) * det(D + 2*Id)_{S x S}; the
    constant term is (-2)^k and every linear coefficient is -(-2)^k.
    """
    cap = _max_k() if max_k is None else max_k
    k = d.n
    if k > cap:
        raise CapacityError(f"blowup polynomial needs a 2^{k} table; cap is k <= {cap}")
    m = d.plus_two_identity()
    minors = linalg.all_principal_minors(m, max_n=cap)
    coeffs = {}
    for mask, minor in minors.items():
        if minor:
            coeffs[mask] = (-2) ** (k - mask.bit_count()) * minor
    return MultiAffinePoly(k, coeffs)


def graph_blowup_polynomial(g: Graph, max_k: int | None = None) -> MultiAffinePoly:
    """Convenience composition: distance matrix, then blowup polynomial."""
    return blowup_polynomial(graphs.distance_matrix(g), max_k=max_k)


def verify_blowup_determinant(g: Graph, sizes) -> bool:
    """Check det D_{G[sizes]} == (-2)^(sum(sizes) - k) * p_G(sizes) exactly.

    Both sides are computed by independent routes: the left by building the
    blowup and eliminating its distance matrix, the right from the
    coefficient table.
    """
    sizes = tuple(int(n) for n in sizes)
    big = graphs.blowup(g, sizes)
    lhs = linalg.determinant(graphs.distance_matrix(big).rows)
    p = graph_blowup_polynomial(g)
    rhs = (-2) ** (sum(sizes) - g.k) * p.evaluate(sizes)
    return lhs == rhs


# ---------------------------------------------------------------------------
# closed forms
# ---------------------------------------------------------------------------

def near_complete_graph(k: int, l: int) -> Graph:
    """Complete graph on k vertices minus the edges from vertex 0 to 1..l.

    Requires 0 <= l <= k-2 so vertex 0 keeps at least one neighbor.
    """
    if not (k >= 2 and 0 <= l <= k - 2):
        raise ValidationError(f"need k >= 2 and 0 <= l <= k-2, got k={k}, l={l}")
    removed = {(0, j) for j in range(1, l + 1)}
    edges = [
        (i, j)
        for i in range(k)
        for j in range(i + 1, k)
        if (i, j) not in removed
    ]
    return Graph(k, edges)


def near_complete_closed_form(k: int, l: int) -> MultiAffinePoly:
    """Closed-form blowup polynomial of near_complete_graph(k, l).

    Expands the elementary-symmetric double sum directly: a subset S with
    r vertices among 1..l and s among l+1..k-1 gets (-2)^(k-r-s)*(1+r+s),
    or (-2)^(k-r-s-1)*(1-r)*(s+2) when vertex 0 is included.  Generated
    independently of the minor pipeline so the two act as mutual oracles.
    """
    if not (k >= 2 and 0 <= l <= k - 2):
        raise ValidationError(f"need k >= 2 and 0 <= l <= k-2, got k={k}, l={l}")
    group_a = range(1, l + 1)
    group_b = range(l + 1, k)
    coeffs = {}
    for mask in range(1 << k):
        r = sum(1 for v in group_a if (mask >> v) & 1)
        s = sum(1 for v in group_b if (mask >> v) & 1)
        if mask & 1:
            c = (-2) ** (k - r - s - 1) * (1 - r) * (s + 2)
        else:
            c = (-2) ** (k - r - s) * (1 + r + s)
        if c:
            coeffs[mask] = c
    return MultiAffinePoly(k, coeffs)


def complete_graph_closed_form(k: int) -> MultiAffinePoly:
    """Product-sum closed form for the complete graph on k vertices.

    Literally expands prod_i (n_i - 2) + sum_i n_i * prod_{i' != i} (n_i' - 2)
    by multiplying out the linear factors, as another independent oracle.
    """
    if k < 1:
        raise ValidationError("need k >= 1")

    def product_over(skip: int | None) -> dict:
        acc = {0: 1}
        for i in range(k):
            if i == skip:
                continue
            nxt = {}
            for m, c in acc.items():
                nxt[m] = nxt.get(m, 0) - 2 * c
                nxt[m | (1 << i)] = nxt.get(m | (1 << i), 0) + c
            acc = nxt
        return acc

    total = dict(product_over(None))
    for i in range(k):
        for m, c in product_over(i).items():
            key = m | (1 << i)
            total[key] = total.get(key, 0) + c
    return MultiAffinePoly(k, total)


# ---------------------------------------------------------------------------
# recovery and symmetries
# ---------------------------------------------------------------------------

def recover_graph(p: MultiAffinePoly) -> Graph:
    """Rebuild the graph whose metric produced p, or fail loudly.

    Squared distances come out of the pair coefficients; the result must
    have integer distances, be a connected unit-edge graph, and reproduce
    its own distance matrix (asserted round trip).
    """
    k = p.k
    if k < 1:
        raise RecoveryError("no variables to recover from")
    if k == 1:
        if p.coeffs == {0: -2, 1: 2}:
            return Graph(1, [])
        raise RecoveryError("polynomial is not the single-vertex blowup polynomial")
    scale = (-2) ** (k - 2)
    rows = [[0] * k for _ in range(k)]
    for i in range(k):
        for j in range(i + 1, k):
            c = p.coeffs.get((1 << i) | (1 << j), 0)
            q, r = divmod(c, scale)
            if r:
                raise RecoveryError(
                    f"pair coefficient of ({i},{j}) is not divisible by (-2)^(k-2)"
                )
            dsq = 4 - q
            if dsq <= 0:
                raise RecoveryError(f"recovered d({i},{j})^2 = {dsq} is not positive")
            droot = math.isqrt(dsq)
            if droot * droot != dsq:
                raise RecoveryError(f"recovered d({i},{j})^2 = {dsq} is not a perfect square")
            rows[i][j] = rows[j][i] = droot
    try:
        dist = DistMatrix(rows, validate_metric=True)
    except ValidationError as exc:
        raise RecoveryError(f"recovered distances are not a metric: {exc}") from None
    g = Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k) if rows[i][j] == 1])
    if not g.is_connected:
        raise RecoveryError("recovered unit-distance graph is disconnected")
    if graphs.distance_matrix(g) != dist:
        raise RecoveryError("recovered distances disagree with the rebuilt graph metric")
    return g


@dataclass(frozen=True)
class SymmetrySet:
    """Permutations fixing a coefficient table, with the full-symmetry flag."""

    perms: tuple
    fully_symmetric: bool

    def __len__(self):
        return len(self.perms)

    def __iter__(self):
        return iter(self.perms)

    def __contains__(self, perm):
        return tuple(perm) in set(self.perms)


def _permute_mask(mask: int, perm) -> int:
    out = 0
    for v in bits(mask):
        out |= 1 << perm[v]
    return out


def polynomial_symmetries(p: MultiAffinePoly, max_k: int = 10) -> SymmetrySet:
    """All variable permutations fixing the coefficient table.

    Factorial search with per-vertex coefficient-profile pruning; intended
    for k <= 10.  The fully-symmetric flag is set iff the whole symmetric
    group fixes p (detected first by checking that coefficients depend only
    on subset size).
    """
    k = p.k
    if k > max_k:
        raise CapacityError(f"symmetry search is capped at k <= {max_k}")
    by_size = [{} for _ in range(k + 1)]
    for mask in range(1 << k):
        by_size[mask.bit_count()][mask] = p.coeffs.get(mask, 0)
    if all(len(set(level.values())) <= 1 for level in by_size):
        return SymmetrySet(tuple(permutations(range(k))), True)

    profiles = []
    for v in range(k):
        prof = []
        for level in by_size:
            prof.append(tuple(sorted(c for m, c in level.items() if (m >> v) & 1)))
        profiles.append(tuple(prof))
    candidates = [
        [w for w in range(k) if profiles[w] == profiles[v]] for v in range(k)
    ]

    found = []
    image = [-1] * k
    used = [False] * k

    def pair(a: int, b: int) -> int:
        return p.coeffs.get((1 << a) | (1 << b), 0)

    def extend(v: int):
        if v == k:
            perm = tuple(image)
            if all(
                p.coeffs.get(_permute_mask(m, perm), 0) == p.coeffs.get(m, 0)
                for m in range(1 << k)
            ):
                found.append(perm)
            return
        for w in candidates[v]:
            if used[w]:
                continue
            if any(pair(v, u) != pair(w, image[u]) for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            extend(v + 1)
            used[w] = False
            image[v] = -1

    extend(0)
    return SymmetrySet(tuple(sorted(found)), len(found) == math.factorial(k))
