"""Tight cuts, their search, and the tight cut decomposition."""

from __future__ import annotations

import itertools
import random
from collections import deque
from dataclasses import dataclass

from .graph import Cut, GraphError, Multigraph, boundary, contract_shore, cut_of
from .matching import (
    enumerate_perfect_matchings,
    is_barrier,
    is_bicritical,
    is_matchable_without,
    is_matching_covered,
    max_matching,
    maximal_barrier_containing,
    perfect_matching_containing,
    perfect_matching_without,
)
from .graph import vertex_connectivity

BARRIER_CUT = "barrier-cut"
TWO_SEPARATION_CUT = "two-separation-cut"
OTHER_CUT = "other"


@dataclass(frozen=True)
class TightCutKind:
    tag: str
    barrier: frozenset[int] | None = None
    pair: tuple[int, int] | None = None
    component: frozenset[int] | None = None

    def to_dict(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.barrier is not None:
            out["barrier"] = sorted(self.barrier)
        if self.pair is not None:
            out["pair"] = list(self.pair)
        if self.component is not None:
            out["component"] = sorted(self.component)
        return out


# ---------------------------------------------------------------------------
# tightness


def _pm_pool(g: Multigraph) -> list[frozenset[int]]:
    pool = g._cache.get("pm_pool")
    if pool is None:
        pool = g._cache["pm_pool"] = []
        pm = max_matching(g)
        if 2 * len(pm) == g.n:
            pool.append(pm)
    return pool


def _seed_pool(g: Multigraph) -> None:
    """Add a perfect matching through every edge, which makes most loose cuts fail fast."""
    if g._cache.get("pool_seeded"):
        return
    pool = _pm_pool(g)
    covered = set().union(*pool) if pool else set()
    for e in sorted(g.edges):
        if e not in covered:
            pm = perfect_matching_containing(g, e)
            if pm is not None:
                pool.append(pm)
                covered |= pm
    g._cache["pool_seeded"] = True


def is_tight_cut(g: Multigraph, shore) -> bool:
    """True iff every perfect matching meets the cut in exactly one edge.

    With an odd shore every perfect matching meets the cut an odd number of
    times, so the cut is loose exactly when some perfect matching uses two
    disjoint cut edges; that is what the pair loop looks for.
    """
    c = shore if isinstance(shore, Cut) else cut_of(g, shore)
    if len(c.shore) % 2 == 0:
        raise GraphError("tight cuts need an odd shore")
    edges = c.edges
    for pm in _pm_pool(g):
        if len(pm & edges) != 1:
            return False
    ids = sorted(edges)
    for i, e in enumerate(ids):
        eu, ev = g.ends(e)
        for f in ids[i + 1:]:
            fu, fv = g.ends(f)
            if len({eu, ev, fu, fv}) < 4:
                continue
            rest = perfect_matching_without(g, (eu, ev, fu, fv))
            if rest is not None:
                _pm_pool(g).append(rest | {e, f})
                return False
    return True


def is_tight_cut_by_enumeration(g: Multigraph, shore) -> bool:
    """Reference check straight from the definition (exponential)."""
    c = shore if isinstance(shore, Cut) else cut_of(g, shore)
    return all(len(pm & c.edges) == 1 for pm in enumerate_perfect_matchings(g))


# ---------------------------------------------------------------------------
# ELP cuts


def barrier_cuts(g: Multigraph, barrier, include_trivial: bool = False) -> list[Cut]:
    """Cuts around the odd components of g - barrier."""
    b = frozenset(barrier)
    if not b or not is_barrier(g, b):
        raise GraphError("not-a-barrier: the vertex set is not a barrier")
    rest = g.vertices - b
    cuts = []
    for comp in g.components(rest):
        if len(comp) % 2 == 0:
            continue
        c = cut_of(g, comp)
        if include_trivial or not c.is_trivial:
            cuts.append(c)
    return cuts


def two_separation_cuts(g: Multigraph, pair) -> list[Cut]:
    """Cuts with shores V(K) + u and V(K) + v for each component K of g - u - v."""
    u, v = pair
    if u == v:
        raise GraphError("a 2-separation needs two distinct vertices")
    comps = g.components(g.vertices - {u, v})
    if len(comps) < 2:
        raise GraphError("not-a-separation: removing the pair leaves the graph connected")
    if any(len(c) % 2 for c in comps):
        raise GraphError("has-odd-component: the pair leaves an odd component")
    cuts = []
    for comp in comps:
        for end in (u, v):
            cuts.append(cut_of(g, comp | {end}))
    return cuts


def _smallest_key(c: Cut):
    s = c.smaller_shore()
    return (len(s), sorted(s))


def _normalized(g: Multigraph, shore: frozenset[int]) -> Cut:
    c = cut_of(g, shore)
    s = c.smaller_shore()
    return c if s == c.shore else c.flipped()


def _nonbipartite_candidates(g: Multigraph, collect_all: bool):
    vs = g.sorted_vertices()
    found = []
    for u, w in itertools.combinations(vs, 2):
        b = maximal_barrier_containing(g, u, w)
        if b is None:
            continue
        comps = [c for c in g.components(g.vertices - b) if len(c) > 1]
        cands = [(_normalized(g, c), TightCutKind(BARRIER_CUT, barrier=b, component=c)) for c in comps]
        if not cands:
            continue
        if not collect_all:
            return [min(cands, key=lambda ck: _smallest_key(ck[0]))]
        found.extend(cands)
    for u, w in itertools.combinations(vs, 2):
        comps = g.components(g.vertices - {u, w})
        if len(comps) < 2 or any(len(c) % 2 for c in comps):
            continue
        cands = []
        for comp in comps:
            for end in (u, w):
                cands.append((_normalized(g, comp | {end}),
                              TightCutKind(TWO_SEPARATION_CUT, pair=(u, w), component=comp)))
        if not collect_all:
            return [min(cands, key=lambda ck: _smallest_key(ck[0]))]
        found.extend(cands)
    return found


def _hall_violator(h: Multigraph, side: frozenset[int]) -> frozenset[int]:
    """Vertices of ``side`` reachable by alternating paths from an exposed one."""
    mate: dict[int, int] = {}
    for e in max_matching(h):
        p, q = h.ends(e)
        mate[p], mate[q] = q, p
    root = min(v for v in side if v not in mate)
    z, seen = {root}, set()
    queue = deque([root])
    while queue:
        p = queue.popleft()
        for q in h.neighbors(p):
            if q not in seen:
                seen.add(q)
                r = mate.get(q)
                if r is not None and r not in z:
                    z.add(r)
                    queue.append(r)
    return frozenset(z)


def _bipartite_candidates(g: Multigraph, parts, collect_all: bool):
    """Barrier cuts of a bipartite graph via Hall violators.

    A nontrivial tight cut has a shore Z + N(Z) with |N(Z)| = |Z| + 1; deleting
    two vertices outside Z on Z's side and two vertices of N(Z) leaves Z with
    too few neighbours, so scanning such quadruples finds every case.
    """
    found = []
    seen = set()
    for side, other in (parts, parts[::-1]):
        for a1, a2 in itertools.combinations(sorted(side), 2):
            for b1, b2 in itertools.combinations(sorted(other), 2):
                quad = (a1, a2, b1, b2)
                if is_matchable_without(g, quad):
                    continue
                h = g.delete_vertices(quad)
                z = _hall_violator(h, side - {a1, a2})
                nz = frozenset(w for v in z for w in g.neighbors(v))
                shore = z | nz
                if len(nz) != len(z) + 1:
                    raise AssertionError("Hall violator does not give a tight barrier")
                c = _normalized(g, shore)
                if c.key() in seen:
                    continue
                seen.add(c.key())
                # the opposite side of the complement is a barrier and the shore
                # is the one nontrivial odd component left by removing it
                kind = TightCutKind(BARRIER_CUT, barrier=side - z, component=shore)
                if not collect_all:
                    return [(c, kind)]
                found.append((c, kind))
    return found


def _candidates(g: Multigraph, collect_all: bool):
    parts = g.bipartition()
    if parts is not None:
        return _bipartite_candidates(g, parts, collect_all)
    return _nonbipartite_candidates(g, collect_all)


def find_nontrivial_tight_cut(g: Multigraph, rng: random.Random | None = None, check: bool = True):
    """A nontrivial barrier cut or 2-separation cut, or None for bricks and braces.

    Without ``rng`` the scan is deterministic: vertex pairs in increasing
    order, barrier cuts before 2-separation cuts, the smaller shore first.
    With ``rng`` one of all such candidates is drawn uniformly.
    """
    if check and not is_matching_covered(g):
        raise GraphError("graph is not matching covered")
    cands = _candidates(g, collect_all=rng is not None)
    if not cands:
        return None
    if rng is None:
        return cands[0]
    cands.sort(key=lambda ck: (_smallest_key(ck[0]), ck[1].tag))
    return cands[rng.randrange(len(cands))]


def enumerate_tight_cuts_exhaustive(g: Multigraph, bound: int = 14) -> list[Cut]:
    """Every nontrivial tight cut, one per {X, complement} pair, by scanning odd shores."""
    if g.n > bound:
        raise GraphError(f"graph has {g.n} vertices, above the exhaustive bound {bound}")
    if not is_matching_covered(g):
        raise GraphError("graph is not matching covered")
    _seed_pool(g)
    vs = g.sorted_vertices()
    root, rest = vs[0], vs[1:]
    out = []
    for k in range(2, len(vs) - 2, 2):
        for extra in itertools.combinations(rest, k):
            shore = frozenset((root, *extra))
            if is_tight_cut(g, shore):
                out.append(cut_of(g, shore))
    return out


# ---------------------------------------------------------------------------
# decomposition


@dataclass
class DecompositionTree:
    graph: Multigraph
    cut: Cut | None = None
    kind: TightCutKind | None = None
    children: tuple["DecompositionTree", ...] = ()
    verdict: str | None = None

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaves(self) -> list["DecompositionTree"]:
        if self.is_leaf:
            return [self]
        return [leaf for ch in self.children for leaf in ch.leaves()]

    def bricks(self) -> list[Multigraph]:
        return [t.graph for t in self.leaves() if t.verdict == "brick"]

    def braces(self) -> list[Multigraph]:
        return [t.graph for t in self.leaves() if t.verdict == "brace"]

    def depth(self) -> int:
        return 0 if self.is_leaf else 1 + max(ch.depth() for ch in self.children)

    def to_dict(self) -> dict:
        g, vmap = self.graph.compact()
        out: dict = {"graph": g.to_dict()}
        if self.is_leaf:
            out["leaf-verdict"] = self.verdict
        else:
            out["cut-shore"] = sorted(vmap[v] for v in self.cut.shore)
            out["kind"] = self.kind.tag if self.kind else OTHER_CUT
            out["children"] = [ch.to_dict() for ch in self.children]
        return out


def _policy_rng(policy) -> random.Random | None:
    if policy is None or policy == "det" or policy == "deterministic":
        return None
    if isinstance(policy, random.Random):
        return policy
    if isinstance(policy, int):
        return random.Random(policy)
    if isinstance(policy, str) and policy.startswith("seed:"):
        return random.Random(int(policy[5:]))
    raise GraphError(f"unknown decomposition policy {policy!r}")


def tight_cut_decomposition(g: Multigraph, policy=None, check: bool = True) -> DecompositionTree:
    """Split along nontrivial tight cuts until only bricks and braces remain.

    ``policy`` is None/"det" for the deterministic scan, or an int seed,
    "seed:N", or a random.Random for uniform choice among candidate cuts.
    """
    if check and not is_matching_covered(g):
        raise GraphError("graph is not matching covered")
    rng = _policy_rng(policy)
    return _decompose(g, rng)


def _decompose(g: Multigraph, rng) -> DecompositionTree:
    found = find_nontrivial_tight_cut(g, rng, check=False)
    if found is None:
        verdict = "brace" if g.is_bipartite() else "brick"
        return DecompositionTree(g, verdict=verdict)
    cut, kind = found
    left = contract_shore(g, cut.complement)
    right = contract_shore(g, cut.shore)
    return DecompositionTree(g, cut, kind, (_decompose(left, rng), _decompose(right, rng)))


def b_count(g: Multigraph, check: bool = True) -> int:
    return len(tight_cut_decomposition(g, check=check).bricks())


def is_brick(g: Multigraph) -> bool:
    """3-connected and bicritical."""
    if g.n < 4 or g.n % 2 or not g.is_connected():
        return False
    if vertex_connectivity(g) < 3:
        return False
    return is_bicritical(g)


def is_brace(g: Multigraph) -> bool:
    if not g.is_bipartite() or not is_matching_covered(g):
        return False
    return find_nontrivial_tight_cut(g, check=False) is None


def is_near_brick(g: Multigraph) -> bool:
    return b_count(g) == 1


# ---------------------------------------------------------------------------
# uncrossing


@dataclass(frozen=True)
class UncrossReport:
    i: Cut
    u: Cut
    cross_edges: frozenset[int]
    sizes: tuple[int, int, int, int]
    i_tight: bool
    u_tight: bool

    @property
    def holds(self) -> bool:
        c, d, i, u = self.sizes
        return self.i_tight and self.u_tight and not self.cross_edges and c + d == i + u


def uncross(g: Multigraph, c, d) -> UncrossReport:
    """Tight cuts at X & Y and at the complement of X | Y for crossing tight cuts."""
    x = c.shore if isinstance(c, Cut) else frozenset(c)
    y = d.shore if isinstance(d, Cut) else frozenset(d)
    xb, yb = g.vertices - x, g.vertices - y
    parts = {"X&Y": x & y, "X&~Y": x & yb, "~X&Y": xb & y, "~X&~Y": xb & yb}
    empty = [name for name, s in parts.items() if not s]
    if empty:
        raise GraphError(f"cuts do not cross: {', '.join(empty)} empty")
    if len(x & y) % 2 == 0:
        y, yb = yb, y
    xy, out = x & y, xb & yb
    icut, ucut = cut_of(g, xy), cut_of(g, out)
    a, b = xb & y, x & yb
    cross = frozenset(e for e, (p, q) in g.edges.items() if (p in a and q in b) or (p in b and q in a))
    sizes = (len(boundary(g, x)), len(boundary(g, y)), icut.size, ucut.size)
    return UncrossReport(icut, ucut, cross, sizes, is_tight_cut(g, icut), is_tight_cut(g, ucut))


def crosses(g: Multigraph, c: Cut, d: Cut) -> bool:
    x, y = c.shore, d.shore
    xb, yb = g.vertices - x, g.vertices - y
    return all((x & y, x & yb, xb & y, xb & yb))
