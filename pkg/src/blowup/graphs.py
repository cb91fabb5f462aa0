"""Finite simple graphs, their shortest-path metrics, and blowups.

Vertices are 0-based ints internally; parsers accept a 1-based header flag
since hand-written inputs usually follow the mathematical convention.
Vertex subsets travel as bitmasks (vertex i <-> bit i, LSB = vertex 0).
All values are immutable after construction and every operation is a pure
function, so everything here can be shared across parallel workers.
"""

from __future__ import annotations

import warnings
from collections import deque
from itertools import combinations

from .errors import (
    CapacityError,
    DisconnectedGraphError,
    ParseError,
    ValidationError,
)


def mask_of(vertices) -> int:
    """Bitmask encoding of an iterable of vertex indices."""
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    """Sorted vertex indices encoded in a bitmask."""
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


class Graph:
    """Immutable simple graph on vertices 0..k-1.

    Disconnected graphs are representable (parsers may produce them) but
    flagged: every metric-dependent operation rejects them explicitly.
    """

    __slots__ = ("k", "adj", "labels", "_connected")

    def __init__(self, k: int, edges, labels=None):
        if k < 1:
            raise ValidationError("a graph needs at least one vertex")
        neigh = [set() for _ in range(k)]
        for u, v in edges:
            if not (0 <= u < k and 0 <= v < k):
                raise ValidationError(f"edge ({u}, {v}) out of range for k={k}")
            if u == v:
                raise ValidationError(f"self-loop at vertex {u}")
            neigh[u].add(v)
            neigh[v].add(u)
        self.k = k
        self.adj = tuple(frozenset(s) for s in neigh)
        self.labels = tuple(labels) if labels is not None else None
        self._connected = self._bfs_component(0) == (1 << k) - 1

    # -- basic structure ---------------------------------------------------

    def _bfs_component(self, start: int) -> int:
        seen = 1 << start
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for w in self.adj[u]:
                if not (seen >> w) & 1:
                    seen |= 1 << w
                    queue.append(w)
        return seen

    @property
    def is_connected(self) -> bool:
        return self._connected

    @property
    def has_isolated_vertices(self) -> bool:
        return any(not s for s in self.adj) and self.k > 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.k) for v in self.adj[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(s) for s in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(len(s) for s in self.adj))

    def is_tree(self) -> bool:
        return self._connected and self.edge_count() == self.k - 1

    def __eq__(self, other):
        return isinstance(other, Graph) and self.k == other.k and self.adj == other.adj

    def __hash__(self):
        return hash((self.k, self.adj))

    def __repr__(self):
        return f"Graph(k={self.k}, edges={self.edges()})"

    def require_connected(self, what: str):
        if not self._connected:
            raise DisconnectedGraphError(f"{what} requires a connected graph")


class DistMatrix:
    """Symmetric integer distance matrix with zero diagonal.

    For user-supplied matrices the metric axioms (positivity and triangle
    inequality) are validated; pass validate_metric=False to accept an
    arbitrary symmetric zero-diagonal matrix for experimentation.
    """

    __slots__ = ("n", "rows", "metric_validated")

    def __init__(self, rows, validate_metric: bool = True):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        for row in rows:
            if len(row) != n:
                raise ValidationError("distance matrix must be square")
        for i in range(n):
            if rows[i][i] != 0:
                raise ValidationError("distance matrix needs a zero diagonal")
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValidationError("distance matrix must be symmetric")
        if validate_metric:
            for i in range(n):
                for j in range(i + 1, n):
                    if rows[i][j] < 1:
                        raise ValidationError(
                            f"off-diagonal distance d({i},{j}) must be >= 1"
                        )
            for i in range(n):
                for j in range(n):
                    for l in range(n):
                        if rows[i][j] > rows[i][l] + rows[l][j]:
                            raise ValidationError(
                                f"triangle inequality fails at ({i},{j},{l})"
                            )
        self.n = n
        self.rows = rows
        self.metric_validated = validate_metric

    def plus_two_identity(self) -> list[list[int]]:
        """The matrix D + 2*Id whose principal minors drive everything."""
        return [
            [self.rows[i][j] + (2 if i == j else 0) for j in range(self.n)]
            for i in range(self.n)
        ]

    def __eq__(self, other):
        return isinstance(other, DistMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"DistMatrix({[list(r) for r in self.rows]})"


# ---------------------------------------------------------------------------
# parsing
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list format: header, then one `u v` pair per line.

    The header is either `n=<k> base=<0|1>` or a bare vertex count (base
    defaults to 1, matching hand-written inputs).  Semicolons count as line
    breaks and `#` starts a comment.  Duplicate edges are deduplicated with
    a warning; self-loops are rejected.  A disconnected result is returned
    but flagged.
    """
    lines = []
    for raw in text.replace(";", "\n").splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ParseError("empty edge-list input")

    k = None
    base = 1
    header = lines[0]
    if "=" in header:
        for tok in header.split():
            key, _, val = tok.partition("=")
            if key == "n":
                k = _parse_int(val, "vertex count")
            elif key == "base":
                base = _parse_int(val, "base flag")
            else:
                raise ParseError(f"unknown header field {tok!r}")
        if k is None:
            raise ParseError("header is missing n=<k>")
    else:
        toks = header.split()
        if len(toks) != 1:
            raise ParseError(f"expected a header line, got {header!r}")
        k = _parse_int(toks[0], "vertex count")
    if k < 1:
        raise ParseError(f"vertex count must be positive, got {k}")
    if base not in (0, 1):
        raise ParseError(f"base must be 0 or 1, got {base}")

    edges = []
    seen = set()
    for line in lines[1:]:
        toks = line.split()
        if len(toks) != 2:
            raise ParseError(f"expected `u v`, got {line!r}")
        u = _parse_int(toks[0], "vertex") - base
        v = _parse_int(toks[1], "vertex") - base
        if not (0 <= u < k and 0 <= v < k):
            raise ParseError(f"edge {line!r} out of range for k={k} (base {base})")
        if u == v:
            raise ParseError(f"self-loop at vertex {toks[0]}")
        key = (min(u, v), max(u, v))
        if key in seen:
            warnings.warn(f"duplicate edge {line!r} ignored", stacklevel=2)
            continue
        seen.add(key)
        edges.append(key)
    return Graph(k, edges)


def _parse_int(tok: str, what: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise ParseError(f"bad {what} {tok!r}") from None


def parse_graph6(data) -> Graph:
    """Decode one short-form graph6 record (k <= 62), bit-exact.

    Accepts str or bytes, with or without the optional `>>graph6<<` header.
    Errors carry the byte offset of the offending character.
    """
    if isinstance(data, bytes):
        try:
            s = data.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError("graph6 data is not ASCII", offset=exc.start) from None
    else:
        s = data
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    s = s.rstrip("\r\n")
    if not s:
        raise ParseError("empty graph6 input", offset=0)
    n = ord(s[0]) - 63
    if not 0 <= n <= 62:
        raise ParseError(f"unsupported graph6 size byte {s[0]!r}", offset=0)
    if n == 0:
        raise ParseError("graph6 record encodes an empty vertex set", offset=0)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(s) - 1 < need:
        raise ParseError(
            f"truncated graph6 record: need {need} data bytes, got {len(s) - 1}",
            offset=len(s),
        )
    if len(s) - 1 > need:
        raise ParseError("trailing bytes after graph6 record", offset=1 + need)
    bitstream = []
    for pos, ch in enumerate(s[1:], start=1):
        v = ord(ch) - 63
        if not 0 <= v < 64:
            raise ParseError(f"invalid graph6 byte {ch!r}", offset=pos)
        bitstream.extend((v >> shift) & 1 for shift in range(5, -1, -1))
    if any(bitstream[nbits:]):
        raise ParseError("nonzero padding bits in graph6 record", offset=len(s) - 1)
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[idx]:
                edges.append((i, j))
            idx += 1
    return Graph(n, edges)


# ---------------------------------------------------------------------------
# metric and blowups
# ---------------------------------------------------------------------------

def distance_matrix(g: Graph) -> DistMatrix:
    """All-pairs shortest-path lengths by BFS from every vertex."""
    g.require_connected("distance_matrix")
    k = g.k
    rows = []
    for src in range(k):
        dist = [-1] * k
        dist[src] = 0
        queue = deque([src])
        while queue:
            u = queue.popleft()
            for w in g.adj[u]:
                if dist[w] < 0:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        rows.append(dist)
    return DistMatrix(rows, validate_metric=False)


def blowup(g: Graph, sizes) -> Graph:
    """Replace vertex v by sizes[v] pairwise non-adjacent copies.

    Copies of v and w are adjacent iff v ~ w in g.  Vertex order in the
    result: all copies of vertex 0 first, then of vertex 1, and so on.
    """
    sizes = tuple(int(n) for n in sizes)
    if len(sizes) != g.k:
        raise ValidationError(f"need {g.k} sizes, got {len(sizes)}")
    if any(n < 1 for n in sizes):
        raise ValidationError("every blowup size must be >= 1")
    g.require_connected("blowup")
    if g.k == 1 and sizes[0] >= 2:
        raise DisconnectedGraphError(
            "blowing up a single vertex into 2+ copies yields a disconnected graph"
        )
    offsets = [0]
    for n in sizes:
        offsets.append(offsets[-1] + n)
    edges = []
    for u, v in g.edges():
        for cu in range(offsets[u], offsets[u + 1]):
            for cv in range(offsets[v], offsets[v + 1]):
                edges.append((cu, cv))
    return Graph(offsets[-1], edges)


def blowup_distance_matrix(d: DistMatrix, sizes) -> DistMatrix:
    """Distance matrix of the blowup, built directly from blocks.

    Off-diagonal block (u, v) is constant d(u, v); within a block distinct
    copies sit at distance 2.  Matches blowup()'s vertex order exactly.
    """
    sizes = tuple(int(n) for n in sizes)
    if len(sizes) != d.n:
        raise ValidationError(f"need {d.n} sizes, got {len(sizes)}")
    if any(n < 1 for n in sizes):
        raise ValidationError("every blowup size must be >= 1")
    owner = []
    for v, n in enumerate(sizes):
        owner.extend([v] * n)
    total = len(owner)
    rows = [
        [
            0 if i == j else (2 if owner[i] == owner[j] else d.rows[owner[i]][owner[j]])
            for j in range(total)
        ]
        for i in range(total)
    ]
    return DistMatrix(rows, validate_metric=False)


def induced_subgraph(g: Graph, mask: int) -> Graph:
    """Subgraph induced on the vertices of mask, reindexed to 0..|mask|-1.

    Connectivity and isolated vertices are readable off the result's
    is_connected / has_isolated_vertices flags.
    """
    verts = bits(mask)
    if not verts:
        raise ValidationError("induced subgraph needs a nonempty vertex set")
    if verts[-1] >= g.k:
        raise ValidationError("vertex set exceeds the graph")
    pos = {v: i for i, v in enumerate(verts)}
    edges = [
        (pos[u], pos[v])
        for u, v in combinations(verts, 2)
        if v in g.adj[u]
    ]
    return Graph(len(verts), edges, labels=verts)


# ---------------------------------------------------------------------------
# structural predicates
# ---------------------------------------------------------------------------

def complete_multipartite_partition(g: Graph):
    """Partition into independent parts with all cross-edges, or None.

    Equivalently: the complement of g must be a disjoint union of cliques;
    the parts are the complement's connected components.
    """
    g.require_connected("complete_multipartite_partition")
    k = g.k
    comp_adj = [frozenset(range(k)) - g.adj[v] - {v} for v in range(k)]
    seen = [False] * k
    parts = []
    for start in range(k):
        if seen[start]:
            continue
        comp = []
        queue = deque([start])
        seen[start] = True
        while queue:
            u = queue.popleft()
            comp.append(u)
            for w in comp_adj[u]:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
        for u, v in combinations(comp, 2):
            if v not in comp_adj[u]:
                return None
        parts.append(frozenset(comp))
    return sorted(parts, key=min)


def _vertex_invariants(g: Graph) -> list:
    if g.is_connected:
        d = distance_matrix(g).rows
        return [
            (len(g.adj[v]), tuple(sorted(d[v])), tuple(sorted(len(g.adj[w]) for w in g.adj[v])))
            for v in range(g.k)
        ]
    return [
        (len(g.adj[v]), (), tuple(sorted(len(g.adj[w]) for w in g.adj[v])))
        for v in range(g.k)
    ]


def are_isomorphic(g1: Graph, g2: Graph):
    """A vertex bijection g1 -> g2 preserving adjacency, or None.

    Backtracking with degree/distance-profile pruning; built for k <= 12.
    """
    if g1.k != g2.k or g1.edge_count() != g2.edge_count():
        return None
    inv1 = _vertex_invariants(g1)
    inv2 = _vertex_invariants(g2)
    if sorted(inv1) != sorted(inv2):
        return None
    k = g1.k
    candidates = [[w for w in range(k) if inv2[w] == inv1[v]] for v in range(k)]
    order = sorted(range(k), key=lambda v: (len(candidates[v]), v))
    image = [-1] * k
    used = [False] * k

    def extend(pos: int):
        if pos == k:
            return True
        v = order[pos]
        for w in candidates[v]:
            if used[w]:
                continue
            ok = True
            for u in order[:pos]:
                if (u in g1.adj[v]) != (image[u] in g2.adj[w]):
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                if extend(pos + 1):
                    return True
                used[w] = False
                image[v] = -1
        return False

    if extend(0):
        return tuple(image)
    return None


def collapse_twins(g: Graph) -> tuple[Graph, tuple[int, ...]]:
    """Merge non-adjacent same-neighborhood pairs until none remain.

    Returns (base, sizes) with blowup(base, sizes) isomorphic to g and base
    blowup-minimal.  Twin merging is scanned in lexicographic pair order,
    so the result is deterministic.
    """
    g.require_connected("collapse_twins")
    verts = list(range(g.k))
    adj = {v: set(g.adj[v]) for v in verts}
    mult = {v: 1 for v in verts}
    changed = True
    while changed:
        changed = False
        for u, v in combinations(verts, 2):
            if v not in adj[u] and adj[u] == adj[v]:
                mult[u] += mult[v]
                for w in adj[v]:
                    adj[w].discard(v)
                del adj[v], mult[v]
                verts.remove(v)
                changed = True
                break
    pos = {v: i for i, v in enumerate(verts)}
    base = Graph(
        len(verts),
        [(pos[u], pos[v]) for u, v in combinations(verts, 2) if v in adj[u]],
    )
    return base, tuple(mult[v] for v in verts)


# ---------------------------------------------------------------------------
# Steiner trees
# ---------------------------------------------------------------------------

def steiner_tree_vertices(t: Graph, mask: int) -> int:
    """Vertex set of the minimal subtree of t containing mask.

    Computed by repeatedly deleting leaves outside mask; the result is
    independent of the deletion order (the minimal subtree is unique).
    """
    if not t.is_tree():
        raise ValidationError("Steiner tree requires a tree")
    if mask == 0:
        raise ValidationError("Steiner tree of the empty set is undefined")
    if mask >> t.k:
        raise ValidationError("vertex set exceeds the tree")
    alive = set(range(t.k))
    deg = {v: len(t.adj[v]) for v in alive}
    queue = deque(v for v in alive if deg[v] <= 1 and not (mask >> v) & 1)
    while queue:
        v = queue.popleft()
        if v not in alive or deg[v] > 1 or (mask >> v) & 1:
            continue
        alive.remove(v)
        for w in t.adj[v]:
            if w in alive:
                deg[w] -= 1
                if deg[w] <= 1 and not (mask >> w) & 1:
                    queue.append(w)
    return mask_of(alive)


# ---------------------------------------------------------------------------
# corpus enumeration
# ---------------------------------------------------------------------------

ENUMERATION_MAX_N = 8

_PAIRS = {n: list(combinations(range(n), 2)) for n in range(ENUMERATION_MAX_N + 1)}


def enumerate_connected_graphs(n: int, dedup: bool = False):
    """Yield every connected graph on n vertices, in deterministic order.

    With dedup=False this walks all labeled graphs (ascending edge-set
    bitmask) -- exponential in n choose 2, sensible only for small n.
    With dedup=True one representative per isomorphism class is produced
    via vertex-extension with invariant bucketing plus exact isomorphism.
    """
    if not 1 <= n <= ENUMERATION_MAX_N:
        raise CapacityError(f"enumeration supports 1 <= n <= {ENUMERATION_MAX_N}")
    if dedup:
        yield from _connected_classes(n)
        return
    pairs = _PAIRS[n]
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        g = Graph(n, edges)
        if g.is_connected:
            yield g


_CLASS_CACHE: dict[int, tuple[Graph, ...]] = {}


def _iso_key(g: Graph):
    return (g.edge_count(), tuple(sorted(_vertex_invariants(g))))


def _connected_classes(n: int) -> tuple[Graph, ...]:
    if n in _CLASS_CACHE:
        return _CLASS_CACHE[n]
    if n == 1:
        out = (Graph(1, []),)
    else:
        out = []
        buckets: dict = {}
        for base in _connected_classes(n - 1):
            base_edges = base.edges()
            for sub in range(1, 1 << (n - 1)):
                g = Graph(n, base_edges + [(v, n - 1) for v in bits(sub)])
                bucket = buckets.setdefault(_iso_key(g), [])
                if any(are_isomorphic(g, h) is not None for h in bucket):
                    continue
                bucket.append(g)
                out.append(g)
        out = tuple(out)
    _CLASS_CACHE[n] = out
    return out


_TREE_CACHE: dict[int, tuple[Graph, ...]] = {}


def enumerate_trees(n: int) -> tuple[Graph, ...]:
    """All trees on n vertices up to isomorphism, by leaf extension."""
    if n < 1:
        raise CapacityError("tree enumeration needs n >= 1")
    if n in _TREE_CACHE:
        return _TREE_CACHE[n]
    if n == 1:
        out = (Graph(1, []),)
    else:
        out = []
        buckets: dict = {}
        for base in enumerate_trees(n - 1):
            base_edges = base.edges()
            for attach in range(n - 1):
                g = Graph(n, base_edges + [(attach, n - 1)])
                bucket = buckets.setdefault(_iso_key(g), [])
                if any(are_isomorphic(g, h) is not None for h in bucket):
                    continue
                bucket.append(g)
                out.append(g)
        out = tuple(out)
    _TREE_CACHE[n] = out
    return out


# -- small named graphs used throughout tests and demos ---------------------

def path_graph(k: int) -> Graph:
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise ValidationError("a cycle needs at least 3 vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph(k, list(combinations(range(k), 2)))


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i + 1) for i in range(leaves)])
