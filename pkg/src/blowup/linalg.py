"""Exact linear algebra over the integers and rationals.

All matrices are small dense lists of Python ints (arbitrary precision),
all polynomials carry int coefficients, and evaluation points may be
``fractions.Fraction``.  No floating point enters any result: determinants
use fraction-free Bareiss elimination, characteristic polynomials use
Faddeev-LeVerrier with asserted exact divisions, eigenvalue sign counts
use Descartes' rule (exact for the real-rooted characteristic polynomial
of a symmetric matrix), and real-rootedness uses Sturm chains with
primitive-part reduction.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import CapacityError, ValidationError

# Hard cap for the 2^n principal-minor table.
MINOR_TABLE_MAX_N = 24


# ---------------------------------------------------------------------------
# determinants and minors
# ---------------------------------------------------------------------------

def determinant(rows) -> int:
    """Exact determinant of a square integer matrix (Bareiss elimination)."""
    n = len(rows)
    a = [[int(x) for x in row] for row in rows]
    for row in a:
        if len(row) != n:
            raise ValidationError("determinant requires a square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for j in range(n - 1):
        if a[j][j] == 0:
            for i in range(j + 1, n):
                if a[i][j] != 0:
                    a[j], a[i] = a[i], a[j]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[j][j]
        for i in range(j + 1, n):
            aij = a[i][j]
            ri, rj = a[i], a[j]
            for l in range(j + 1, n):
                ri[l] = (ri[l] * pivot - aij * rj[l]) // prev
            ri[j] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def determinant_rational(rows) -> Fraction:
    """Exact determinant of a matrix with Fraction/int entries.

    Each row is scaled to integers by its common denominator; the integer
    determinant is then divided back.
    """
    n = len(rows)
    scaled = []
    scale = 1
    for row in rows:
        fracs = [Fraction(x) for x in row]
        lcm = 1
        for f in fracs:
            lcm = lcm * f.denominator // math.gcd(lcm, f.denominator)
        scaled.append([int(f * lcm) for f in fracs])
        scale *= lcm
    return Fraction(determinant(scaled), scale) if n else Fraction(1)


def submatrix(rows, mask: int):
    """Principal submatrix on the rows/columns whose bits are set in mask."""
    idx = [i for i in range(len(rows)) if (mask >> i) & 1]
    return [[rows[i][j] for j in idx] for i in idx]


def principal_minor(rows, mask: int) -> int:
    """Determinant of the principal submatrix selected by mask; empty -> 1."""
    return determinant(submatrix(rows, mask))


def all_principal_minors(rows, max_n: int = MINOR_TABLE_MAX_N) -> dict[int, int]:
    """Table of every principal minor, keyed by subset bitmask.

    Each subset is eliminated independently (Bareiss per subset); at the
    documented cap n <= 24 this is cheap and trivially parallel.
    """
    n = len(rows)
    if n > max_n:
        raise CapacityError(f"minor table needs 2^{n} entries; cap is n <= {max_n}")
    return {mask: principal_minor(rows, mask) for mask in range(1 << n)}


def is_psd(rows) -> bool:
    """Exact positive-semidefiniteness test for a symmetric integer matrix.

    Uses the all-principal-minors criterion with early exit on the first
    negative minor.
    """
    _require_symmetric(rows)
    n = len(rows)
    for mask in range(1, 1 << n):
        if principal_minor(rows, mask) < 0:
            return False
    return True


def _require_symmetric(rows):
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise ValidationError("matrix is not symmetric")


# ---------------------------------------------------------------------------
# univariate integer polynomials
# ---------------------------------------------------------------------------

class IntPoly:
    """Dense univariate polynomial with int coefficients, low degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [int(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"IntPoly({list(self.coeffs)})"

    def __add__(self, other: "IntPoly") -> "IntPoly":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPoly(out)

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPoly([c * other for c in self.coeffs])
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1 or 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def shift(self, m: int) -> "IntPoly":
        """Multiply by x^m."""
        return IntPoly((0,) * m + self.coeffs) if self.coeffs else self

    def evaluate(self, x):
        """Exact Horner evaluation; int in -> int, Fraction in -> Fraction."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def content(self) -> int:
        g = 0
        for c in self.coeffs:
            g = math.gcd(g, c)
        return g

    def primitive(self) -> "IntPoly":
        """Divide out the content; sign normalised so the leading coeff > 0."""
        if self.is_zero:
            return self
        g = self.content()
        if self.coeffs[-1] < 0:
            g = -g
        return IntPoly([c // g for c in self.coeffs])

    def reduced(self) -> "IntPoly":
        """Divide out the content by a positive factor, keeping all signs."""
        if self.is_zero:
            return self
        g = self.content()
        return IntPoly([c // g for c in self.coeffs])


def poly_exact_div(p: IntPoly, d: IntPoly) -> IntPoly:
    """Quotient p / d when d divides p over the rationals (asserted)."""
    if d.is_zero:
        raise ValidationError("division by the zero polynomial")
    rem = list(p.coeffs)
    dc = d.coeffs
    dn = len(dc)
    qdeg = len(rem) - dn
    if qdeg < 0:
        if not p.is_zero:
            raise ValidationError("polynomial division is not exact")
        return IntPoly()
    q = [0] * (qdeg + 1)
    for i in range(qdeg, -1, -1):
        lead = rem[i + dn - 1]
        coef, r = divmod(lead, dc[-1])
        if r != 0:
            raise ValidationError("polynomial division is not exact")
        q[i] = coef
        if coef:
            for j in range(dn):
                rem[i + j] -= coef * dc[j]
    if any(rem):
        raise ValidationError("polynomial division is not exact")
    return IntPoly(q)


def _pseudo_rem(a: IntPoly, b: IntPoly) -> tuple[IntPoly, int]:
    """Pseudo-remainder of a by b and the sign of the scale factor used.

    Returns (rem, s) with rem = lc(b)^(delta+1) * a mod b and
    s = sign(lc(b)^(delta+1)); the true remainder has sign s * sign(rem).
    """
    delta = a.degree - b.degree
    lc = b.coeffs[-1]
    factor = lc ** (delta + 1)
    rem = [c * factor for c in a.coeffs]
    bc = b.coeffs
    for i in range(delta, -1, -1):
        lead = rem[i + len(bc) - 1]
        coef, r = divmod(lead, lc)
        assert r == 0, "pseudo-division lost exactness"
        if coef:
            for j in range(len(bc)):
                rem[i + j] -= coef * bc[j]
    return IntPoly(rem[: len(bc) - 1]), (1 if factor > 0 else -1)


def poly_gcd(a: IntPoly, b: IntPoly) -> IntPoly:
    """Primitive gcd over the integers (primitive PRS)."""
    a, b = a.primitive(), b.primitive()
    while not b.is_zero:
        if a.degree < b.degree:
            a, b = b, a
            continue
        rem, _ = _pseudo_rem(a, b)
        a, b = b, rem.primitive()
    return a.primitive()


def squarefree_part(p: IntPoly) -> IntPoly:
    """p with repeated roots stripped (p / gcd(p, p'))."""
    if p.is_zero:
        raise ValidationError("square-free part of the zero polynomial")
    if p.degree == 0:
        return IntPoly([1])
    g = poly_gcd(p, p.derivative())
    return poly_exact_div(p.primitive(), g).primitive()


def sturm_chain(p: IntPoly) -> list[IntPoly]:
    """Sturm chain of p with each term content-reduced.

    Only positive scalings are applied (the pseudo-remainder's sign is
    corrected for a negative scale factor), so sign variation counts agree
    with the textbook rational chain.
    """
    chain = [p.reduced()]
    d = p.derivative()
    if d.is_zero:
        return chain
    chain.append(d.reduced())
    while chain[-1].degree > 0:
        rem, s = _pseudo_rem(chain[-2], chain[-1])
        if rem.is_zero:
            break
        nxt = -rem if s > 0 else rem
        chain.append(nxt.reduced())
    return chain


def _variations(signs) -> int:
    count = 0
    prev = 0
    for s in signs:
        if s == 0:
            continue
        if prev and s != prev:
            count += 1
        prev = s
    return count


def _sign(x) -> int:
    return (x > 0) - (x < 0)


def sturm_count_real_roots(p: IntPoly) -> int:
    """Number of distinct real roots of p (nonzero), via Sturm at +/-inf."""
    if p.is_zero:
        raise ValidationError("Sturm count of the zero polynomial")
    chain = sturm_chain(p)
    at_pos = [_sign(q.coeffs[-1]) for q in chain]
    at_neg = [_sign(q.coeffs[-1]) * (-1) ** q.degree for q in chain]
    return _variations(at_neg) - _variations(at_pos)


def sturm_is_real_rooted(p: IntPoly) -> bool:
    """True iff every complex root of p is real (with multiplicity)."""
    if p.is_zero:
        raise ValidationError("real-rootedness of the zero polynomial is undefined")
    q = squarefree_part(p)
    if q.degree <= 0:
        return True
    return sturm_count_real_roots(q) == q.degree


# ---------------------------------------------------------------------------
# characteristic polynomial and inertia
# ---------------------------------------------------------------------------

def _matmul(a, b):
    n = len(a)
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        ai = a[i]
        oi = out[i]
        for l in range(n):
            x = ai[l]
            if x:
                bl = b[l]
                for j in range(n):
                    oi[j] += x * bl[j]
    return out


def char_poly(rows) -> IntPoly:
    """Monic characteristic polynomial det(x*Id - m), exact integer coefficients.

    Faddeev-LeVerrier recursion; every division by the step index is
    integer-exact and asserted.
    """
    n = len(rows)
    m = [[int(x) for x in row] for row in rows]
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mat = [[0] * n for _ in range(n)]
    c = 1
    for step in range(1, n + 1):
        for i in range(n):
            mat[i][i] += c
        mat = _matmul(m, mat)
        tr = sum(mat[i][i] for i in range(n))
        c, r = divmod(-tr, step)
        assert r == 0, "Faddeev-LeVerrier division must be exact"
        coeffs[n - step] = c
    return IntPoly(coeffs)


def inertia(rows) -> tuple[int, int, int]:
    """Eigenvalue sign counts (n_plus, n_minus, n_zero) of a symmetric matrix.

    The characteristic polynomial of a symmetric integer matrix is
    real-rooted, so Descartes' rule counts its positive and negative roots
    exactly (with multiplicity).
    """
    _require_symmetric(rows)
    n = len(rows)
    p = char_poly(rows)
    cs = list(p.coeffs)
    zeros = 0
    while cs and cs[0] == 0:
        cs.pop(0)
        zeros += 1
    plus = _variations(_sign(c) for c in cs)
    minus = _variations(_sign(c) * (-1) ** i for i, c in enumerate(cs))
    assert plus + minus + zeros == n
    return plus, minus, zeros
