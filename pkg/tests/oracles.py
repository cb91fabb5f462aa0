"""Independent oracles used by the test suite.

These deliberately avoid the library's own code paths: determinants by
cofactor expansion, automorphism groups by filtering all permutations,
multi-affine coefficients by grid interpolation, and graph6 records
encoded by hand from the published format description.
"""

from __future__ import annotations

from itertools import permutations


def cofactor_determinant(rows):
    """Recursive cofactor expansion along the first row."""
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[rows[i][l] for l in range(n) if l != j] for i in range(1, n)]
        total += (-1) ** j * rows[0][j] * cofactor_determinant(minor)
    return total


def brute_force_automorphisms(g):
    """All adjacency-preserving permutations, by exhausting S_k."""
    k = g.k
    out = []
    for perm in permutations(range(k)):
        if all(
            (perm[v] in g.adj[perm[u]]) == (v in g.adj[u])
            for u in range(k)
            for v in range(u + 1, k)
        ):
            out.append(perm)
    return out


def interpolate_multiaffine(values: dict, k: int) -> dict:
    """Coefficients of a multi-affine polynomial from its values on {1,2}^k.

    values[mask] is the value at the point with coordinate i equal to 2 if
    bit i of mask is set, else 1.  A butterfly per coordinate inverts the
    evaluation: from v(1) = a + b and v(2) = a + 2b recover a = 2*v(1) - v(2)
    and b = v(2) - v(1).
    """
    table = [values[mask] for mask in range(1 << k)]
    for i in range(k):
        bit = 1 << i
        for mask in range(1 << k):
            if mask & bit:
                continue
            lo, hi = table[mask], table[mask | bit]
            table[mask] = 2 * lo - hi
            table[mask | bit] = hi - lo
    return {mask: c for mask, c in enumerate(table) if c}


def encode_graph6(g) -> str:
    """Short-form graph6 record, transcribed from the format definition.

    Size byte chr(n + 63); then the upper-triangle bits x(i, j) taken
    column by column (j = 1..n-1, i < j), packed big-endian into 6-bit
    groups, zero padded, each group offset by 63.
    """
    n = g.k
    assert n <= 62
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if j in g.adj[i] else 0)
    while len(bits) % 6:
        bits.append(0)
    out = [chr(n + 63)]
    for pos in range(0, len(bits), 6):
        val = 0
        for b in bits[pos : pos + 6]:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


def random_steiner_prune(t, mask: int, rng) -> int:
    """Steiner vertex set by deleting random eligible leaves, one at a time."""
    alive = set(range(t.k))
    while True:
        leaves = [
            v
            for v in alive
            if not (mask >> v) & 1 and len(t.adj[v] & alive) <= 1
        ]
        if not leaves:
            break
        alive.remove(rng.choice(leaves))
    out = 0
    for v in alive:
        out |= 1 << v
    return out
