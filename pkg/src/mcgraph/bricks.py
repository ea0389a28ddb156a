"""Edge classes of cubic bricks and the structures behind them.

Everything here is about cubic bricks, mostly essentially 4-edge-connected
ones (efec: 3-edge-connected with every 3-edge-cut trivial).  An edge is
removable when its deletion leaves a matching covered graph; it is
b-invariant or quasi-b-invariant when that graph has one or two bricks.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graph import GraphError, Multigraph, contract_shore, cut_of, edge_connectivity, enumerate_small_edge_cuts
from .iso import canonical_form
from .matching import (
    depends,
    is_admissible,
    is_barrier,
    is_bicritical,
    is_matchable_without,
    is_matching_covered,
    is_special_barrier,
    isolated_vertices,
    maximal_barrier_containing,
)
from .tightcuts import DecompositionTree, is_brick, tight_cut_decomposition

DOUBLETON = "doubleton-member"
B_INVARIANT = "b-invariant"
QUASI = "quasi-b-invariant"
REMOVABLE_OTHER = "removable-other"
NON_REMOVABLE = "non-removable"


class StructureError(AssertionError):
    """A structural property that should hold was found to fail."""


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise StructureError(message)


def _cached(g: Multigraph, key, compute):
    if key not in g._cache:
        g._cache[key] = compute()
    return g._cache[key]


# ---------------------------------------------------------------------------
# host predicates


def is_essentially_4ec_cubic(g: Multigraph) -> bool:
    def compute():
        if not g.is_cubic() or not g.is_connected():
            return False
        if edge_connectivity(g) < 3:
            return False
        return all(c.is_trivial for c in enumerate_small_edge_cuts(g, 3))
    return _cached(g, "efec", compute)


def is_cubic_brick(g: Multigraph) -> bool:
    return g.is_cubic() and _cached(g, "brick", lambda: is_brick(g))


def _require_cubic_brick(g: Multigraph, efec: bool) -> None:
    if not is_cubic_brick(g):
        raise GraphError("host is not a cubic brick")
    if efec and not is_essentially_4ec_cubic(g):
        raise GraphError("host is not essentially 4-edge-connected")


def is_removable(g: Multigraph, e: int) -> bool:
    g.ends(e)
    return is_matching_covered(g.delete_edges(e))


# ---------------------------------------------------------------------------
# doubletons


def _dependence_sets(g: Multigraph) -> dict[int, frozenset[int]]:
    """For each admissible edge, the edges it depends on."""
    def compute():
        out = {}
        for e in sorted(g.edges):
            if not is_admissible(g, e):
                continue
            u, v = g.ends(e)
            out[e] = frozenset(
                f for f in g.edges
                if f != e and not is_matchable_without(g.delete_edges(f), (u, v))
            )
        return out
    return _cached(g, "depsets", compute)


def removable_doubletons(g: Multigraph) -> list[tuple[int, int]]:
    """Pairs {e, f} with g - e - f bipartite and matching covered."""
    def compute():
        if not _cached(g, "brick", lambda: is_brick(g)):
            raise GraphError("removable doubletons are defined for bricks")
        deps = _dependence_sets(g)
        out = []
        for e in sorted(deps):
            for f in sorted(deps[e]):
                # mutual dependence is necessary, so it screens the candidates
                if f <= e or e not in deps.get(f, ()):
                    continue
                h = g.delete_edges(e, f)
                if h.is_bipartite() and is_matching_covered(h):
                    out.append((e, f))
        return out
    return list(_cached(g, "doubletons", compute))


def is_near_bipartite(g: Multigraph) -> bool:
    return bool(removable_doubletons(g))


# ---------------------------------------------------------------------------
# classification


@dataclass
class EdgeClassification:
    edge: int
    ends: tuple[int, int]
    verdict: str
    partner: int | None = None
    b: int | None = None
    tree: DecompositionTree | None = None
    bipartition: tuple[frozenset[int], frozenset[int]] | None = None

    def to_dict(self) -> dict:
        out: dict = {"edge": self.edge, "ends": list(self.ends), "verdict": self.verdict}
        if self.partner is not None:
            out["partner"] = self.partner
        if self.b is not None:
            out["b"] = self.b
        return out


def classify_edge(g: Multigraph, e: int, relaxed: bool = False) -> EdgeClassification:
    """Doubleton member, b-invariant, quasi-b-invariant, or (relaxed) something else.

    The b value comes from a full tight cut decomposition of g - e.
    """
    _require_cubic_brick(g, efec=not relaxed)
    return _cached(g, ("class", e), lambda: _classify(g, e))


def _classify(g: Multigraph, e: int) -> EdgeClassification:
    ends = g.ends(e)
    for a, b in removable_doubletons(g):
        if e in (a, b):
            partner = b if e == a else a
            return EdgeClassification(e, ends, DOUBLETON, partner=partner,
                                      bipartition=g.delete_edges(a, b).bipartition())
    h = g.delete_edges(e)
    if not is_matching_covered(h):
        return EdgeClassification(e, ends, NON_REMOVABLE)
    tree = tight_cut_decomposition(h, check=False)
    b = len(tree.bricks())
    verdict = {1: B_INVARIANT, 2: QUASI}.get(b, REMOVABLE_OTHER)
    return EdgeClassification(e, ends, verdict, b=b, tree=tree)


def classify_edges(g: Multigraph, relaxed: bool = False) -> list[EdgeClassification]:
    return [classify_edge(g, e, relaxed) for e in sorted(g.edges)]


# ---------------------------------------------------------------------------
# 3-edge-colouring


def is_3_edge_colorable(g: Multigraph) -> bool:
    if not g.is_cubic():
        raise GraphError("edge colouring test expects a cubic graph")

    def compute():
        # order edges along a BFS so constraints bite early
        order: list[int] = []
        seen: set[int] = set()
        for root in g.sorted_vertices():
            queue = [root]
            visited = {root}
            while queue:
                x = queue.pop(0)
                for f in g.incident(x):
                    if f not in seen:
                        seen.add(f)
                        order.append(f)
                    y = g.other_end(f, x)
                    if y not in visited:
                        visited.add(y)
                        queue.append(y)
        colour: dict[int, int] = {}
        used = {v: set() for v in g.vertices}
        first = g.sorted_vertices()[0]
        # the three edges at the first vertex get distinct colours w.l.o.g.
        for c, f in enumerate(g.incident(first)):
            a, b = g.ends(f)
            if c in used[a] or c in used[b]:
                return False
            colour[f] = c
            used[a].add(c)
            used[b].add(c)
        rest = [f for f in order if f not in colour]

        def rec(i: int) -> bool:
            if i == len(rest):
                return True
            f = rest[i]
            a, b = g.ends(f)
            for c in range(3):
                if c not in used[a] and c not in used[b]:
                    used[a].add(c)
                    used[b].add(c)
                    if rec(i + 1):
                        return True
                    used[a].discard(c)
                    used[b].discard(c)
            return False

        return rec(0)

    return _cached(g, "3ec", compute)


def is_snark(g: Multigraph) -> bool:
    if not g.is_cubic():
        raise GraphError("snarks are cubic")
    return is_essentially_4ec_cubic(g) and is_cubic_brick(g) and not is_3_edge_colorable(g)


# ---------------------------------------------------------------------------
# structure around a removable edge


ONE_BARRIER = "one-barrier"
TWO_BARRIER = "two-barrier"


@dataclass
class RemovableStructure:
    case: str
    edge: int
    v: int
    u: int
    B: frozenset[int]
    I: frozenset[int]
    H: Multigraph
    x: int
    b: int
    Bp: frozenset[int] | None = None
    Ip: frozenset[int] | None = None
    xp: int | None = None
    L: frozenset[int] | None = None
    Lp: frozenset[int] | None = None
    J: Multigraph | None = None
    Jp: Multigraph | None = None
    xx: int | None = None
    labels: dict[str, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        out: dict = {
            "case": self.case, "edge": self.edge, "v": self.v, "u": self.u,
            "B": sorted(self.B), "I": sorted(self.I), "x": self.x, "b": self.b,
        }
        if self.case == TWO_BARRIER:
            out.update({"Bp": sorted(self.Bp), "Ip": sorted(self.Ip), "xp": self.xp})
        if self.L is not None:
            out.update({"L": sorted(self.L), "Lp": sorted(self.Lp), "edges": dict(self.labels)})
        return out


def _other_neighbors(g: Multigraph, e: int, v: int) -> tuple[int, int]:
    nbrs = [g.other_end(f, v) for f in g.incident(v) if f != e]
    _require(len(set(nbrs)) == 2, "endpoint does not have two distinct other neighbours")
    return tuple(sorted(nbrs))  # type: ignore[return-value]


def _two_vertex_cuts(h: Multigraph) -> list[tuple[int, int]]:
    return [p for p in itertools.combinations(h.sorted_vertices(), 2)
            if len(h.components(h.vertices - set(p))) > 1]


def _barriers_within(g: Multigraph, outer: frozenset[int], required: set[int]):
    """Barriers S with required <= S <= outer, largest first, ties lexicographic.

    Every barrier of a matching covered graph lies inside the maximal barrier
    through any of its vertices, so scanning subsets of ``outer`` is complete.
    """
    extra = sorted(outer - required)
    for k in range(len(extra), -1, -1):
        for combo in itertools.combinations(extra, k):
            s = frozenset(required) | frozenset(combo)
            if is_barrier(g, s):
                yield s


def _one_barrier(ge: Multigraph, b: frozenset[int], v: int, u: int):
    iso = isolated_vertices(ge, b)
    if not (is_special_barrier(ge, b) and v in iso and u in iso):
        return None
    X = b | iso
    H = contract_shore(ge, X, "x")
    return (b, iso, H, min(X)) if is_bicritical(H) else None


def _two_barrier(ge: Multigraph, b: frozenset[int], bp: frozenset[int], v: int, u: int):
    iso, isop = isolated_vertices(ge, b), isolated_vertices(ge, bp)
    if not (is_special_barrier(ge, b) and is_special_barrier(ge, bp)):
        return None
    if not (v in iso and u in isop and u not in iso and v not in isop):
        return None
    X, Xp = b | iso, bp | isop
    if X & Xp:
        return None
    H = contract_shore(contract_shore(ge, X, "x"), Xp, "x'")
    return (iso, isop, H, min(X), min(Xp)) if is_bicritical(H) else None


def removable_structure(g: Multigraph, e: int, v: int | None = None) -> RemovableStructure:
    """Barrier structure of g - e for a removable edge e = vu of an efec cubic brick.

    v defaults to the smaller end.  When one barrier of g - e can hold the
    other neighbours of both v and u, the one-barrier case is sought: a
    special barrier B isolating both ends whose shore X = B + I shrinks to a
    vertex x leaving a bicritical H.  Otherwise barriers B (through v's other
    neighbours) and B' (through u's) are sought with disjoint X = B + I and
    X' = B' + I' and bicritical H after shrinking both.  Candidates are
    tried largest first, ties lexicographic, and the first that qualifies is
    used.  The remaining properties of H, and the split of a non-brick H at
    {x, x'} into cubic bricks J and J', are then asserted.
    """
    _require_cubic_brick(g, efec=True)
    a, c = g.ends(e)
    if v is None:
        v = a
    if v not in (a, c):
        raise GraphError("v is not an end of e")
    u = c if v == a else a
    ge = g.delete_edges(e)
    if not is_matching_covered(ge):
        raise GraphError("edge is not removable")

    nv, nu = _other_neighbors(g, e, v), _other_neighbors(g, e, u)
    mv = maximal_barrier_containing(ge, *nv)
    mu = maximal_barrier_containing(ge, *nu)
    _require(mv is not None and mu is not None, "neighbour pair of a degree-2 vertex is not in a barrier")

    if mv == mu:
        found = None
        for b in _barriers_within(ge, mv, set(nv) | set(nu)):
            found = _one_barrier(ge, b, v, u)
            if found:
                break
        _require(found is not None, "no barrier realises the one-barrier case")
        b, iso, H, x = found
        _require(len(iso) == len(b) - 1, "|I| != |B| - 1")
        _require(H.degree(x) == 5, "contraction vertex does not have degree five")
        _require(all(H.degree(w) == 3 for w in H.vertices if w != x), "H has another noncubic vertex")
        _require(is_brick(H), "H is not a brick in the one-barrier case")
        return RemovableStructure(ONE_BARRIER, e, v, u, b, iso, H, x, 1)

    found = None
    cands_u = list(_barriers_within(ge, mu, set(nu)))
    for b in _barriers_within(ge, mv, set(nv)):
        for bp in cands_u:
            found = _two_barrier(ge, b, bp, v, u)
            if found:
                break
        if found:
            break
    _require(found is not None, "no pair of barriers realises the two-barrier case")
    iv, iu, H, x, xp = found
    bv, bu = b, bp
    _require(len(iv) == len(bv) - 1 and len(iu) == len(bu) - 1, "|I| != |B| - 1")
    _require(H.degree(x) == 4 and H.degree(xp) == 4, "contraction vertices do not have degree four")
    _require(all(H.degree(w) == 3 for w in H.vertices if w not in (x, xp)), "H has another noncubic vertex")
    st = RemovableStructure(TWO_BARRIER, e, v, u, bv, iv, H, x, 1, bu, iu, xp)
    if is_brick(H):
        return st
    _require(_two_vertex_cuts(H) == [tuple(sorted((x, xp)))], "{x, x'} is not the unique 2-vertex-cut of H")
    comps = H.components(H.vertices - {x, xp})
    _require(len(comps) == 2 and all(len(k) % 2 == 0 for k in comps), "H - x - x' is not two even components")
    L, Lp = sorted(comps, key=min)
    st.b = 2
    st.L, st.Lp = L, Lp

    def into(w: int, comp: frozenset[int]) -> list[int]:
        return sorted(f for f in H.incident(w) if H.other_end(f, w) in comp)

    sides = [into(x, L), into(x, Lp), into(xp, L), into(xp, Lp)]
    _require(all(len(s) == 2 for s in sides), "x or x' does not send exactly two edges into each of L, L'")
    (d, f_), (g_, h_), (dp, fp), (gp, hp) = sides
    st.labels = {"d": d, "f": f_, "g": g_, "h": h_, "d'": dp, "f'": fp, "g'": gp, "h'": hp}
    _require(cut_of(H, L).edges == {d, f_, dp, fp}, "boundary of L is not {d, f, d', f'}")
    _require(cut_of(H, Lp).edges == {g_, h_, gp, hp}, "boundary of L' is not {g, h, g', h'}")
    for w, comp in ((x, L), (x, Lp), (xp, L), (xp, Lp)):
        _require(len({H.other_end(f, w) for f in into(w, comp)}) == 2,
                 "contraction vertex has a repeated neighbour in L or L'")
    Hx, xx = H.add_edge(x, xp)
    st.J, st.Jp, st.xx = Hx.delete_vertices(Lp), Hx.delete_vertices(L), xx
    return st


def qbinv_structure(g: Multigraph, e: int, v: int | None = None) -> RemovableStructure:
    """The fully labelled two-barrier structure of a quasi-b-invariant edge."""
    cls = classify_edge(g, e)
    if cls.verdict != QUASI:
        raise GraphError("edge is not quasi-b-invariant")
    st = removable_structure(g, e, v)
    _require(st.case == TWO_BARRIER and st.L is not None, "quasi edge without split H")
    return st


def structure_violations(g: Multigraph, st: RemovableStructure) -> list[str]:
    """Checks on a quasi-b-invariant structure; returns the failed ones."""
    bad: list[str] = []
    if st.case != TWO_BARRIER or st.L is None:
        return ["structure is not split two-barrier"]
    lab = st.labels
    for name, j in (("J", st.J), ("J'", st.Jp)):
        if not (j.is_cubic() and is_brick(j)):
            bad.append(f"{name} is not a cubic brick")
            continue
        for c in enumerate_small_edge_cuts(j, 3):
            if not c.is_trivial and c.size == 3 and st.xx not in c.edges:
                bad.append(f"{name} has a nontrivial 3-cut avoiding xx'")
                break
    X, Xp = st.B | st.I, st.Bp | st.Ip
    for name, shore in (("B+I+L", X | st.L), ("B+I+L'", X | st.Lp),
                        ("B'+I'+L", Xp | st.L), ("B'+I'+L'", Xp | st.Lp)):
        if g.subgraph(shore).is_bipartite():
            bad.append(f"G[{name}] is bipartite")
    for p, q in (("d", "f"), ("g", "h"), ("d'", "f'"), ("g'", "h'")):
        if set(g.ends(lab[p])) & set(g.ends(lab[q])):
            bad.append(f"{p} and {q} are adjacent in G")
    for name, comp in (("L", st.L), ("L'", st.Lp)):
        sub = g.subgraph(comp)
        if not is_matchable_without(sub, ()):
            bad.append(f"{name} is not matchable")
        if not _two_connected(sub):
            bad.append(f"{name} is not 2-connected")
    for name, b, iso, end in (("B", st.B, st.I, st.v), ("B'", st.Bp, st.Ip, st.u)):
        rest = iso - {end}
        for p, q in itertools.combinations(sorted(b), 2):
            sub = g.subgraph((b - {p, q}) | rest)
            if not is_matchable_without(sub, ()):
                bad.append(f"G[({name}-p-q) + (I-end)] not matchable for {p},{q}")
        if len(b) >= 3 and not g.subgraph(b | rest).is_connected():
            bad.append(f"G[{name} + (I-end)] is disconnected")
    return bad


def _two_connected(g: Multigraph) -> bool:
    if g.n <= 2:
        return g.is_connected()
    if not g.is_connected():
        return False
    return all(len(g.components(g.vertices - {w})) == 1 for w in g.vertices)


# ---------------------------------------------------------------------------
# flexibility


@dataclass
class FlexibilityReport:
    inflexible: bool
    d: int
    f: int
    dp: int
    fp: int
    doubletons_hold: bool | None = None
    xx_admissible_hold: bool | None = None
    flexible_pairs_hold: bool | None = None


def is_inflexible(j: Multigraph, xx: int, x: int | None = None) -> FlexibilityReport:
    """Whether an edge at x depends on an edge at x' (or vice versa) in the cubic brick j.

    When it does, the edges are relabelled so that the dependent pair is
    (d, d'), and both {d, d'} and {f, f'} are checked to be removable
    doubletons.  When it does not, every choice of one edge at x and one at
    x' is checked to lie in a common perfect matching.
    """
    if not is_cubic_brick(j):
        raise GraphError("host is not a cubic brick")
    a, b = j.ends(xx)
    if x is None:
        x = a
    if x not in (a, b):
        raise GraphError("x is not an end of the designated edge")
    xp = b if x == a else a
    for c in enumerate_small_edge_cuts(j, 3):
        if not c.is_trivial and c.size == 3 and xx not in c.edges:
            raise GraphError("a nontrivial 3-cut avoids the designated edge")
    at_x = sorted(f for f in j.incident(x) if f != xx)
    at_xp = sorted(f for f in j.incident(xp) if f != xx)
    if len(at_x) != 2 or len(at_xp) != 2:
        raise GraphError("designated edge is parallel to another edge")
    pair = None
    for p in at_x:
        for q in at_xp:
            if depends(j, p, q) or depends(j, q, p):
                pair = (p, q)
                break
        if pair:
            break
    if pair is None:
        d, f = at_x
        dp, fp = at_xp
        ok = all(
            is_matchable_without(j, set(j.ends(p)) | set(j.ends(q)))
            for p in at_x for q in at_xp if not set(j.ends(p)) & set(j.ends(q))
        )
        return FlexibilityReport(False, d, f, dp, fp, flexible_pairs_hold=ok)
    d, dp = pair
    f = next(t for t in at_x if t != d)
    fp = next(t for t in at_xp if t != dp)
    dbl = {frozenset(p) for p in removable_doubletons(j)}
    holds = frozenset((d, dp)) in dbl and frozenset((f, fp)) in dbl
    adm = _xx_admissible_after_doubleton(j, xx, x, xp, d, dp) if holds else None
    return FlexibilityReport(True, d, f, dp, fp, doubletons_hold=holds, xx_admissible_hold=adm)


def _xx_admissible_after_doubleton(j: Multigraph, xx: int, x: int, xp: int, d: int, dp: int) -> bool:
    """For each w on the far side except x', xx' is admissible in J - d - d' - y - w."""
    h = j.delete_edges(d, dp)
    y = j.other_end(d, x)
    parts = h.bipartition()
    t = parts[0] if x in parts[0] else parts[1]
    tp = h.vertices - t
    if y not in t:
        return False
    for w in sorted(tp - {xp}):
        k = h.delete_vertices((y, w))
        if not is_matchable_without(k, (x, xp)):
            return False
    return True


# ---------------------------------------------------------------------------
# two quasi-b-invariant edges at a vertex


@dataclass
class VertexOutcome:
    v: int
    edges: tuple[int, int, int]
    verdicts: tuple[str, str, str]
    third: int
    outcome: str
    isomorphism_ok: bool

    def to_dict(self) -> dict:
        return {"v": self.v, "edges": list(self.edges), "verdicts": list(self.verdicts),
                "third": self.third, "outcome": self.outcome, "isomorphism_ok": self.isomorphism_ok}


def _reference_forms():
    from .catalog import catalog
    return canonical_form(catalog("cubeplex").graph), canonical_form(catalog("petersen").graph)


def two_qbinv_vertex_outcome(g: Multigraph, v: int) -> VertexOutcome:
    """Which of the three outcomes holds at a vertex with two quasi-b-invariant edges.

    (i) the third edge is in a removable doubleton and g is the Cubeplex,
    (ii) it is quasi-b-invariant and g is the Petersen graph,
    (iii) it is b-invariant.
    """
    edges = tuple(sorted(g.incident(v)))
    verdicts = tuple(classify_edge(g, e).verdict for e in edges)
    quasi = [e for e, s in zip(edges, verdicts) if s == QUASI]
    if len(quasi) < 2:
        raise GraphError("vertex has fewer than two quasi-b-invariant edges")
    third = next((e for e in edges if e not in quasi[:2]), quasi[-1])
    kind = verdicts[edges.index(third)]
    cube, pet = _reference_forms()
    form = canonical_form(g)
    if kind == DOUBLETON:
        return VertexOutcome(v, edges, verdicts, third, "i", form == cube)
    if kind == QUASI:
        return VertexOutcome(v, edges, verdicts, third, "ii", form == pet)
    return VertexOutcome(v, edges, verdicts, third, "iii", kind == B_INVARIANT)


# ---------------------------------------------------------------------------
# census


@dataclass
class Census:
    n: int
    b_invariant_edges: int
    quasi_edges: int
    doubletons: int
    class_count: int
    edges_in_classes: int
    vertex_has_class: dict[int, bool]
    near_bipartite: bool
    is_petersen: bool

    @property
    def every_vertex_covered(self) -> bool:
        return all(self.vertex_has_class.values())

    def to_dict(self) -> dict:
        return {
            "n": self.n, "b_invariant_edges": self.b_invariant_edges, "quasi_edges": self.quasi_edges,
            "doubletons": self.doubletons, "class_count": self.class_count,
            "edges_in_classes": self.edges_in_classes, "every_vertex_covered": self.every_vertex_covered,
            "near_bipartite": self.near_bipartite, "is_petersen": self.is_petersen,
        }


def binv_census(g: Multigraph) -> Census:
    """Counts of b-invariant classes (b-invariant edges and removable doubletons)."""
    classes = classify_edges(g)
    binv = [c.edge for c in classes if c.verdict == B_INVARIANT]
    dbl = removable_doubletons(g)
    in_class = set(binv) | {e for p in dbl for e in p}
    has = {w: any(f in in_class for f in g.incident(w)) for w in g.sorted_vertices()}
    _, pet = _reference_forms()
    return Census(
        n=g.n,
        b_invariant_edges=len(binv),
        quasi_edges=sum(1 for c in classes if c.verdict == QUASI),
        doubletons=len(dbl),
        class_count=len(binv) + len(dbl),
        edges_in_classes=len(in_class),
        vertex_has_class=has,
        near_bipartite=bool(dbl),
        is_petersen=canonical_form(g) == pet,
    )


# ---------------------------------------------------------------------------
# barrier enumeration and small lemmas


def enumerate_barriers(g: Multigraph, min_size: int = 1) -> list[frozenset[int]]:
    """Every barrier of g (exhaustive over vertex subsets; for small graphs)."""
    verts = g.sorted_vertices()
    idx = {w: i for i, w in enumerate(verts)}
    n = len(verts)
    nb = [0] * n
    for a, b in g.edges.values():
        nb[idx[a]] |= 1 << idx[b]
        nb[idx[b]] |= 1 << idx[a]
    full = (1 << n) - 1
    out = []
    for mask in range(1, full + 1):
        size = bin(mask).count("1")
        if size < min_size:
            continue
        rest = full & ~mask
        odd = 0
        while rest:
            low = rest & -rest
            comp = low
            frontier = low
            while frontier:
                bit = frontier & -frontier
                frontier ^= bit
                new = nb[bit.bit_length() - 1] & rest & ~comp
                comp |= new
                frontier |= new
            rest &= ~comp
            if bin(comp).count("1") % 2:
                odd += 1
        if odd == size:
            out.append(frozenset(verts[i] for i in range(n) if mask >> i & 1))
    return out


def four_cut_violations(g: Multigraph) -> list[str]:
    """4-cuts with two edges meeting inside a shore whose shore is not a single edge."""
    bad = []
    for c in enumerate_small_edge_cuts(g, 4):
        if c.size != 4:
            continue
        for shore in (c.shore, c.complement):
            ends_inside = [next(w for w in g.ends(f) if w in shore) for f in c.edges]
            if len(set(ends_inside)) < 4:
                sub = g.subgraph(shore)
                if not (sub.n == 2 and sub.m == 1):
                    bad.append(f"shore {sorted(shore)} of 4-cut {sorted(c.edges)}")
    return bad
