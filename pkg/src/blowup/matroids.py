"""Set families attached to blowup polynomials, graphs, and trees.

Families are ground sets plus collections of feasible subsets (bitmask
encoded).  The delta-matroid test is the brute-force symmetric exchange
axiom plus ground-set coverage; witnesses are returned in lexicographic
(A, B, x) order so failures are reproducible.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from itertools import combinations

from . import graphs
from .errors import CapacityError, ValidationError
from .graphs import Graph, bits, mask_of
from .polynomials import MultiAffinePoly

DEFAULT_TWIN_FAMILY_MAX_K = 12


def _twin_family_max_k() -> int:
    return int(os.environ.get("BLOWUP_MAX_K", DEFAULT_TWIN_FAMILY_MAX_K))


@dataclass(frozen=True)
class SetFamily:
    """A ground set {0..ground_size-1} and its feasible subsets."""

    ground_size: int
    feasible: frozenset

    def __post_init__(self):
        for m in self.feasible:
            if m >> self.ground_size:
                raise ValidationError(f"feasible set {m} exceeds the ground set")

    def __contains__(self, mask: int) -> bool:
        return mask in self.feasible

    def __len__(self) -> int:
        return len(self.feasible)

    def to_json_dict(self) -> dict:
        return {"ground_size": self.ground_size, "feasible": sorted(self.feasible)}

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json_dict(cls, doc: dict) -> "SetFamily":
        return cls(int(doc["ground_size"]), frozenset(int(m) for m in doc["feasible"]))

    @classmethod
    def from_json(cls, text: str) -> "SetFamily":
        return cls.from_json_dict(json.loads(text))


def support_family(p: MultiAffinePoly) -> SetFamily:
    """Subsets whose monomial survives in p.

    For a blowup polynomial these are exactly the subsets on which the
    metric matrix D + 2*Id has a nonsingular principal submatrix.
    """
    return SetFamily(p.k, frozenset(p.coeffs))


def is_delta_matroid(f: SetFamily):
    """None if f satisfies coverage and symmetric exchange; else a witness.

    The witness is ("uncovered", v) for a ground element missing from
    every feasible set, or ("exchange", A, B, x) for a failed exchange:
    x in A symmetric-difference B with no y making A ^ {x, y} feasible
    (y = x, a single flip, is allowed).  Search order is lexicographic by
    (A, B, x), so the first witness is deterministic.
    """
    if not f.feasible:
        raise ValidationError("delta-matroid test needs a nonempty family")
    covered = 0
    for m in f.feasible:
        covered |= m
    full = (1 << f.ground_size) - 1
    if covered != full:
        missing = (covered ^ full) & -(covered ^ full)
        return ("uncovered", missing.bit_length() - 1)
    feas = sorted(f.feasible)
    fset = f.feasible
    k = f.ground_size
    for a in feas:
        # exchange_ok[x]: bitmask of the y with a ^ {x, y} feasible
        # (y = x encodes the single flip)
        exchange_ok = []
        for x in range(k):
            bx = 1 << x
            m = 0
            for y in range(k):
                if (a ^ (bx | (1 << y))) in fset:
                    m |= 1 << y
            exchange_ok.append(m)
        for b in feas:
            diff = a ^ b
            rest = diff
            while rest:
                x = (rest & -rest).bit_length() - 1
                if not (exchange_ok[x] & diff):
                    return ("exchange", a, b, x)
                rest &= rest - 1
    return None


def tree_blowup_family(t: Graph) -> SetFamily:
    """Feasible subsets of a tree under the Steiner-leaf rule.

    A subset I is infeasible iff the minimal subtree spanning I has two
    leaves, both in I, attached to the same vertex ("parent" means a
    leaf's unique neighbor inside the subtree).  The empty set and
    singletons are always feasible.
    """
    if not t.is_tree():
        raise ValidationError("tree_blowup_family requires a tree")
    k = t.k
    feasible = set()
    for mask in range(1 << k):
        if mask.bit_count() < 2:
            feasible.add(mask)
            continue
        sub = graphs.steiner_tree_vertices(t, mask)
        members = bits(sub)
        inside = set(members)
        parents_seen = set()
        bad = False
        for v in members:
            inner = t.adj[v] & inside
            if len(inner) == 1 and (mask >> v) & 1:
                parent = next(iter(inner))
                if parent in parents_seen:
                    bad = True
                    break
                parents_seen.add(parent)
        if not bad:
            feasible.add(mask)
    return SetFamily(k, frozenset(feasible))


def path_family(k: int) -> SetFamily:
    """The path pattern family: everything except {i, i+2} and {i, i+1, i+2}.

    Excluded masks use consecutive vertices 0..k-1; for k <= 2 nothing is
    excluded and the family is the full power set.
    """
    if k < 1:
        raise ValidationError("need k >= 1")
    excluded = set()
    for i in range(k - 2):
        excluded.add(0b101 << i)
        excluded.add(0b111 << i)
    feasible = frozenset(m for m in range(1 << k) if m not in excluded)
    return SetFamily(k, feasible)


def twin_obstruction_family(g: Graph, kind: int) -> SetFamily:
    """Generalize the tree rule to graphs via twins in induced supersets.

    A subset I is infeasible iff it contains two vertices that have the
    same neighbors inside some induced supergraph G(J) with I <= J, where
    G(J) must be connected (kind 1) or additionally isometric in G --
    distances inside G(J) agree with global distances (kind 2).  On trees
    both kinds coincide with tree_blowup_family.
    """
    if kind not in (1, 2):
        raise ValidationError("kind must be 1 or 2")
    g.require_connected("twin_obstruction_family")
    k = g.k
    cap = _twin_family_max_k()
    if k > cap:
        raise CapacityError(f"twin family enumerates 2^{k} supersets; cap is k <= {cap}")
    adj_mask = [mask_of(g.adj[v]) for v in range(k)]
    global_dist = graphs.distance_matrix(g).rows
    full = (1 << k) - 1

    qualify_cache: dict[int, bool] = {}

    def qualifies(sup: int) -> bool:
        cached = qualify_cache.get(sup)
        if cached is not None:
            return cached
        ok = True
        sub = graphs.induced_subgraph(g, sup)
        if not sub.is_connected:
            ok = False
        elif kind == 2:
            local = graphs.distance_matrix(sub).rows
            verts = bits(sup)
            for a, b in combinations(range(len(verts)), 2):
                if local[a][b] != global_dist[verts[a]][verts[b]]:
                    ok = False
                    break
        qualify_cache[sup] = ok
        return ok

    witnesses: dict[tuple[int, int], list[int]] = {}
    for v1, v2 in combinations(range(k), 2):
        if (adj_mask[v1] >> v2) & 1:
            continue  # adjacent vertices can never share open neighborhoods
        pair_bits = (1 << v1) | (1 << v2)
        hits = []
        rest = full ^ pair_bits
        sub = rest
        while True:
            sup = pair_bits | sub
            if (adj_mask[v1] & sup) == (adj_mask[v2] & sup) and qualifies(sup):
                hits.append(sup)
            if sub == 0:
                break
            sub = (sub - 1) & rest
        if hits:
            witnesses[(v1, v2)] = hits

    infeasible = set()
    for (v1, v2), hits in witnesses.items():
        pair_bits = (1 << v1) | (1 << v2)
        for sup in hits:
            rest = sup ^ pair_bits
            sub = rest
            while True:
                infeasible.add(pair_bits | sub)
                if sub == 0:
                    break
                sub = (sub - 1) & rest
    feasible = frozenset(m for m in range(1 << k) if m not in infeasible)
    return SetFamily(k, feasible)


@dataclass(frozen=True)
class FamilyDiff:
    """Symmetric difference of two families over the same ground set."""

    only_in_a: tuple
    only_in_b: tuple

    @property
    def equal(self) -> bool:
        return not self.only_in_a and not self.only_in_b


def compare_families(a: SetFamily, b: SetFamily) -> FamilyDiff:
    if a.ground_size != b.ground_size:
        raise ValidationError(
            f"ground sizes differ: {a.ground_size} vs {b.ground_size}"
        )
    return FamilyDiff(
        only_in_a=tuple(sorted(a.feasible - b.feasible)),
        only_in_b=tuple(sorted(b.feasible - a.feasible)),
    )
