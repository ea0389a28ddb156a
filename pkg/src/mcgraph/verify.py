"""Exhaustive theorem checks over graph corpora, with JSON Lines reporting.

Every check is a function of one graph.  It returns ``None`` when the graph
is outside the statement's hypotheses, otherwise a :class:`GraphResult`
holding failure witnesses and a few tallies.  The runner fans graphs out
over worker processes and sorts results by canonical form, so reports are
byte-identical across runs and job counts.
"""

from __future__ import annotations

import itertools
import json
import multiprocessing
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable

from .bricks import (
    B_INVARIANT, DOUBLETON, NON_REMOVABLE, QUASI, REMOVABLE_OTHER, EdgeClassification,
    StructureError, binv_census, classify_edge, classify_edges, enumerate_barriers,
    four_cut_violations, is_3_edge_colorable, is_cubic_brick, is_essentially_4ec_cubic, is_inflexible,
    is_near_bipartite, is_removable, is_snark,
    removable_doubletons, removable_structure, structure_violations, two_qbinv_vertex_outcome,
)
from .catalog import NAMES, catalog
from .corpus import Corpus, generate_cubic, read_corpus
from .graph import GraphError, Multigraph, underlying_simple
from .iso import canonical_form, certificate_key
from .matching import (
    brute_force_matching_number, is_bicritical, is_matching_covered, is_special_barrier,
    matching_number,
)
from .tightcuts import (
    b_count, crosses, enumerate_tight_cuts_exhaustive, find_nontrivial_tight_cut, is_brace,
    is_brick, tight_cut_decomposition, uncross,
)

EXHAUSTIVE_BOUND = 14


@dataclass
class VerifyOptions:
    seed: int = 0
    jobs: int = 1
    orders: int = 100


@dataclass
class GraphResult:
    failures: list[dict] = field(default_factory=list)
    stats: Counter = field(default_factory=Counter)

    def fail(self, where, expected, actual) -> None:
        self.failures.append({"where": where, "expected": expected, "actual": actual})


@dataclass
class TheoremReport:
    theorem: str
    corpus: str
    checked: int
    passed: int
    failed: int
    skipped: int
    witnesses: list[dict]
    stats: dict
    lines: list[dict]

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def summary(self) -> dict:
        return {
            "summary": True, "theorem": self.theorem, "corpus": self.corpus,
            "checked": self.checked, "passed": self.passed, "failed": self.failed,
            "skipped": self.skipped, "stats": self.stats,
        }

    def to_jsonl(self) -> str:
        rows = self.lines + [self.summary()]
        return "".join(json.dumps(r, sort_keys=True) + "\n" for r in rows)


def _efec_brick(g: Multigraph) -> bool:
    return g.is_cubic() and is_essentially_4ec_cubic(g) and is_cubic_brick(g)


def _cubic_mc(g: Multigraph) -> bool:
    return g.is_cubic() and g.n <= EXHAUSTIVE_BOUND and is_matching_covered(g)


def _edge_name(g: Multigraph, e: int) -> list[int]:
    return [e, *g.ends(e)]


# ---------------------------------------------------------------------------
# oracle gates


def check_matching_oracle(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if g.n > 12:
        return None
    r = GraphResult()
    fast, slow = matching_number(g), brute_force_matching_number(g)
    if fast != slow:
        r.fail("matching number", slow, fast)
    return r


def check_elp_oracle(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if g.n > EXHAUSTIVE_BOUND or not is_matching_covered(g):
        return None
    r = GraphResult()
    every = {c.key() for c in enumerate_tight_cuts_exhaustive(g)}
    found = find_nontrivial_tight_cut(g)
    if found is None:
        if every:
            r.fail("search", "a nontrivial tight cut", None)
    else:
        cut, kind = found
        r.stats[kind.tag] += 1
        if cut.key() not in every:
            r.fail("search result", "a cut from the exhaustive list", sorted(cut.shore))
    return r


# ---------------------------------------------------------------------------
# tight cuts


def check_t11(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not is_matching_covered(g):
        return None
    r = GraphResult()
    ref = None
    for k in range(opts.orders):
        tree = tight_cut_decomposition(g, policy=f"seed:{opts.seed * 100003 + k}", check=False)
        leaves = sorted(certificate_key(canonical_form(underlying_simple(t.graph))) for t in tree.leaves())
        if ref is None:
            ref = leaves
        elif leaves != ref:
            r.fail(f"order {k}", ref, leaves)
            break
    r.stats["leaves"] += len(ref or [])
    return r


def check_t14(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    return check_elp_oracle(g, opts)


def check_t16(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not _cubic_mc(g):
        return None
    r = GraphResult()
    for c in enumerate_tight_cuts_exhaustive(g):
        r.stats["tight cuts"] += 1
        if c.size != 3:
            r.fail({"shore": sorted(c.shore)}, 3, c.size)
    return r


def check_c17(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not (g.is_cubic() and is_essentially_4ec_cubic(g)):
        return None
    r = GraphResult()
    brick, brace = is_brick(g), is_brace(g)
    r.stats["brick" if brick else "brace" if brace else "neither"] += 1
    if brick == brace:
        r.fail("verdict", "brick xor brace", {"brick": brick, "brace": brace})
    return r


def check_l15(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if g.n > 12 or not is_matching_covered(g):
        return None
    r = GraphResult()
    cuts = enumerate_tight_cuts_exhaustive(g)
    for c, d in itertools.combinations(cuts, 2):
        if not crosses(g, c, d):
            continue
        rep = uncross(g, c, d)
        r.stats["crossing pairs"] += 1
        where = {"C": sorted(c.shore), "D": sorted(d.shore)}
        if not rep.holds:
            r.fail(where, "I, U tight; no cross edges; |C|+|D| = |I|+|U|",
                   {"i_tight": rep.i_tight, "u_tight": rep.u_tight,
                    "cross_edges": sorted(rep.cross_edges), "sizes": list(rep.sizes)})
        if g.is_cubic() and rep.sizes[2:] != (3, 3):
            r.fail(where, [3, 3], list(rep.sizes[2:]))
    return r


# ---------------------------------------------------------------------------
# edge classes of efec cubic bricks


def check_t18(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not _efec_brick(g):
        return None
    r = GraphResult()
    members = {e for p in removable_doubletons(g) for e in p}
    for e in sorted(g.edges):
        rem, dbl = is_removable(g, e), e in members
        r.stats["removable" if rem else "doubleton member" if dbl else "neither"] += 1
        if rem == dbl:
            r.fail({"edge": _edge_name(g, e)}, "removable xor doubleton member",
                   {"removable": rem, "doubleton": dbl})
    return r


def check_t110(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not _efec_brick(g):
        return None
    r = GraphResult()
    for c in classify_edges(g):
        if c.verdict == NON_REMOVABLE or (c.verdict == DOUBLETON and not is_removable(g, c.edge)):
            continue
        if c.verdict == DOUBLETON:
            c = _classify_removable(g, c.edge)
        where = {"edge": _edge_name(g, c.edge)}
        if c.b not in (1, 2):
            r.fail(where, "b in {1, 2}", c.b)
            continue
        r.stats[f"b={c.b}"] += 1
        for v in g.ends(c.edge):
            try:
                st = removable_structure(g, c.edge, v)
            except StructureError as exc:
                r.fail({**where, "v": v}, "structure extracted", str(exc))
                continue
            r.stats[st.case] += 1
            if st.b != c.b:
                r.fail({**where, "v": v}, c.b, {"case": st.case, "b": st.b})
    return r


def _classify_removable(g: Multigraph, e: int) -> EdgeClassification:
    b = b_count(g.delete_edges(e), check=False)
    return EdgeClassification(e, g.ends(e), {1: B_INVARIANT, 2: QUASI}.get(b, REMOVABLE_OTHER), b=b)


def check_c112(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not _efec_brick(g):
        return None
    r = GraphResult()
    members = {e for p in removable_doubletons(g) for e in p}
    for c in classify_edges(g):
        r.stats[c.verdict] += 1
        if c.verdict == DOUBLETON:
            rem = is_removable(g, c.edge)
            b = b_count(g.delete_edges(c.edge), check=False) if rem else None
        else:
            rem, b = c.verdict != NON_REMOVABLE, c.b
        classes = [c.edge in members, rem and b == 1, rem and b == 2]
        if sum(classes) != 1:
            r.fail({"edge": _edge_name(g, c.edge)}, "exactly one class",
                   {"doubleton": classes[0], "removable": rem, "b": b})
    return r


def check_t111(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not _efec_brick(g):
        return None
    r = GraphResult()
    cube = canonical_form(catalog("cubeplex").graph)
    pet = canonical_form(catalog("petersen").graph)
    form = canonical_form(g)
    seen = set()
    for v in g.sorted_vertices():
        quasi = sum(1 for e in g.incident(v) if classify_edge(g, e).verdict == QUASI)
        if quasi < 2:
            continue
        out = two_qbinv_vertex_outcome(g, v)
        seen.add(out.outcome)
        r.stats[f"outcome {out.outcome}"] += 1
        if not out.isomorphism_ok:
            r.fail({"v": v}, "outcome consistent with the graph", out.to_dict())
    if form == pet and "ii" not in seen:
        r.fail("petersen", "outcome ii", sorted(seen))
    if form == cube and "i" not in seen:
        r.fail("cubeplex", "outcome i", sorted(seen))
    return r


def check_c113(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not _efec_brick(g):
        return None
    r = GraphResult()
    cen = binv_census(g)
    if cen.is_petersen:
        r.stats["petersen"] += 1
        return r
    bad = [w for w, ok in cen.vertex_has_class.items() if not ok]
    if bad:
        r.fail("vertices without a b-invariant class", [], bad)
    return r


def check_c114(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not _efec_brick(g):
        return None
    r = GraphResult()
    cen = binv_census(g)
    if cen.is_petersen or cen.near_bipartite:
        r.stats["exempt"] += 1
        return r
    r.stats["non-near-bipartite"] += 1
    if 2 * cen.b_invariant_edges < g.n:
        r.fail("b-invariant edge count", f">= {g.n / 2}", cen.b_invariant_edges)
    return r


def check_snark(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not _efec_brick(g):
        return None
    r = GraphResult()
    near = is_near_bipartite(g)
    if is_snark(g):
        r.stats["snarks"] += 1
        if near:
            r.fail("snark", "non-near-bipartite", "near-bipartite")
        bad = [e for e in sorted(g.edges) if not is_removable(g, e)]
        if bad:
            r.fail("snark", "every edge removable", bad)
    if near and not is_3_edge_colorable(g):
        r.fail("near-bipartite", "3-edge-colorable", False)
    return r


# ---------------------------------------------------------------------------
# structure lemmas


def check_p34(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not _efec_brick(g) or g.n > 12:
        return None
    r = GraphResult()
    for e in sorted(g.edges):
        if not is_removable(g, e):
            continue
        h = g.delete_edges(e)
        for b in enumerate_barriers(h):
            r.stats["barriers"] += 1
            if not is_special_barrier(h, b):
                r.fail({"edge": _edge_name(g, e), "barrier": sorted(b)}, "special", False)
    return r


def check_p35_39(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not _efec_brick(g):
        return None
    r = GraphResult()
    for c in classify_edges(g):
        if c.verdict != QUASI:
            continue
        for v in g.ends(c.edge):
            where = {"edge": _edge_name(g, c.edge), "v": v}
            try:
                st = removable_structure(g, c.edge, v)
            except StructureError as exc:
                r.fail(where, "structure extracted", str(exc))
                continue
            r.stats["structures"] += 1
            for msg in structure_violations(g, st):
                r.fail(where, "no violation", msg)
            if st.J is None:
                continue
            for name, j in (("J", st.J), ("J'", st.Jp)):
                try:
                    fx = is_inflexible(j, st.xx, st.x)
                except GraphError as exc:
                    r.fail({**where, "brick": name}, "flexibility defined", str(exc))
                    continue
                r.stats["inflexible" if fx.inflexible else "flexible"] += 1
                if fx.inflexible and not (fx.doubletons_hold and fx.xx_admissible_hold):
                    r.fail({**where, "brick": name}, "doubletons and admissibility",
                           {"doubletons": fx.doubletons_hold, "admissible": fx.xx_admissible_hold})
                if not fx.inflexible and not fx.flexible_pairs_hold:
                    r.fail({**where, "brick": name}, "every d/d' pair in a perfect matching", False)
    return r


def check_l36(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not (g.is_cubic() and g.n <= 16 and is_essentially_4ec_cubic(g)):
        return None
    r = GraphResult()
    for msg in four_cut_violations(g):
        r.fail("4-cut", "shore is a single edge", msg)
    r.stats["graphs"] += 1
    return r


def check_l41(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if g.n > 12 or g.n < 4 or g.n % 2 or not is_matching_covered(g) or not is_bicritical(g):
        return None
    r = GraphResult()
    barriers = {e: enumerate_barriers(g.delete_edges(e), min_size=2) for e in sorted(g.edges)}
    for v in g.sorted_vertices():
        for e1, e2 in itertools.combinations(sorted(g.incident(v)), 2):
            for b1 in barriers[e1]:
                for b2 in barriers[e2]:
                    r.stats["pairs"] += 1
                    if len(b1 & b2) > 1:
                        r.fail({"edges": [e1, e2], "B1": sorted(b1), "B2": sorted(b2)}, "<= 1",
                               len(b1 & b2))
    return r


def check_l45(g: Multigraph, opts: VerifyOptions) -> GraphResult | None:
    if not _efec_brick(g):
        return None
    r = GraphResult()
    for v in g.sorted_vertices():
        edges = sorted(g.incident(v))
        verdict = {e: classify_edge(g, e).verdict for e in edges}
        far = {e: g.other_end(e, v) for e in edges}
        size = {}
        for e in edges:
            if verdict[e] != QUASI:
                continue
            try:
                st = removable_structure(g, e, v)
            except StructureError as exc:
                r.fail({"v": v, "edge": e}, "structure extracted", str(exc))
                return r
            size[e] = len(st.B)
            others = [f for f in edges if f != e]
            if any(verdict[f] == DOUBLETON for f in others):
                r.stats["one quasi, one doubleton"] += 1
                want = sorted(far[f] for f in others)
                if sorted(st.B) != want:
                    r.fail({"v": v, "edge": e}, want, sorted(st.B))
        for e1, e2 in itertools.combinations(sorted(size), 2):
            r.stats["two quasi"] += 1
            if min(size[e1], size[e2]) != 2:
                r.fail({"v": v, "edges": [e1, e2]}, "some barrier of size two", [size[e1], size[e2]])
        if len(size) == 3:
            r.stats["three quasi"] += 1
            if sum(1 for s in size.values() if s == 2) < 2:
                r.fail({"v": v}, "two barriers of size two", sorted(size.values()))
    return r


CHECKS: dict[str, tuple[Callable, str]] = {
    "ORACLE-MATCHING": (check_matching_oracle, "blossom agrees with exhaustive matching"),
    "ORACLE-ELP": (check_elp_oracle, "cut search agrees with exhaustive tight cut enumeration"),
    "T1.1": (check_t11, "leaf multiset independent of the decomposition order"),
    "T1.4": (check_t14, "a nontrivial tight cut exists iff the search finds one"),
    "T1.6": (check_t16, "tight cuts of cubic matching covered graphs are 3-cuts"),
    "C1.7": (check_c17, "efec cubic graphs are bricks or braces"),
    "T1.8": (check_t18, "each edge is removable xor in a removable doubleton"),
    "T1.10": (check_t110, "removable edges have b(G-e) in {1, 2}, matching the structure"),
    "C1.12": (check_c112, "doubleton / b-invariant / quasi-b-invariant trichotomy"),
    "T1.11": (check_t111, "two quasi edges at a vertex: Cubeplex, Petersen, or b-invariant third"),
    "C1.13": (check_c113, "every vertex meets a b-invariant class"),
    "C1.14": (check_c114, "non-near-bipartite bricks have >= n/2 b-invariant edges"),
    "L1.5": (check_l15, "uncrossing of crossing tight cuts"),
    "P3.4": (check_p34, "barriers after deleting a removable edge are special"),
    "P3.5-3.9": (check_p35_39, "structure around a quasi-b-invariant edge"),
    "L3.6": (check_l36, "4-cuts with adjacent edges cut off a single edge"),
    "L4.1": (check_l41, "barriers after deleting adjacent edges share <= 1 vertex"),
    "L4.5": (check_l45, "barrier sizes at a vertex with quasi edges"),
    "SNARK": (check_snark, "snarks are non-near-bipartite with all edges removable"),
}
THEOREMS = tuple(CHECKS)


# ---------------------------------------------------------------------------
# runner


def _run_one(args) -> tuple[str, dict]:
    tid, gdict, opts = args
    g = Multigraph.from_dict(gdict)
    key = certificate_key(canonical_form(g))
    res = CHECKS[tid][0](g, opts)
    row: dict = {"theorem": tid, "canonical": key, "n": g.n, "m": g.m}
    if res is None:
        row["status"] = "skipped"
    else:
        row["status"] = "fail" if res.failures else "pass"
        row["stats"] = dict(sorted(res.stats.items()))
        if res.failures:
            row["witnesses"] = [{"graph": gdict, **w} for w in res.failures]
    return key, row


def verify_theorem(tid: str, corpus: Corpus | Iterable[Multigraph],
                   options: VerifyOptions | None = None) -> TheoremReport:
    """Run one theorem check over every graph of a corpus."""
    if tid not in CHECKS:
        raise GraphError(f"unknown theorem id {tid!r}; known: {', '.join(THEOREMS)}")
    opts = options or VerifyOptions()
    graphs = list(corpus)
    source = corpus.source if isinstance(corpus, Corpus) else "graphs"
    tasks = [(tid, g.to_dict(), opts) for g in graphs]
    if opts.jobs > 1 and len(tasks) > 1:
        with multiprocessing.Pool(opts.jobs) as pool:
            rows = pool.map(_run_one, tasks, chunksize=1)
    else:
        rows = [_run_one(t) for t in tasks]
    rows.sort(key=lambda kr: (kr[0], json.dumps(kr[1], sort_keys=True)))
    lines = [row for _, row in rows]
    stats: Counter = Counter()
    for row in lines:
        stats.update(row.get("stats", {}))
    witnesses = [w for row in lines for w in row.get("witnesses", [])]
    counts = Counter(row["status"] for row in lines)
    return TheoremReport(
        theorem=tid, corpus=source,
        checked=counts["pass"] + counts["fail"], passed=counts["pass"], failed=counts["fail"],
        skipped=counts["skipped"], witnesses=witnesses, stats=dict(sorted(stats.items())), lines=lines,
    )


def build_corpus(ns: Iterable[int] = (), path=None, catalog_names: Iterable[str] = ()) -> Corpus:
    graphs: list[Multigraph] = []
    parts = []
    for n in ns:
        graphs.extend(generate_cubic(n).graphs)
        parts.append(f"generated({n})")
    if path is not None:
        c = read_corpus(path)
        graphs.extend(c.graphs)
        parts.append(c.source)
    for name in catalog_names:
        graphs.append(catalog(name).graph)
        parts.append(f"catalog({name})")
    return Corpus("+".join(parts) or "empty", tuple(graphs), dedup="raw" if path or catalog_names else "isomorphism-free")


def random_mc_sample(count: int, seed: int, max_n: int = 12) -> Corpus:
    from .corpus import random_matching_covered
    rng = random.Random(seed)
    return Corpus(f"random-mc({count},seed={seed})",
                  tuple(random_matching_covered(rng, max_n) for _ in range(count)), dedup="raw")


# ---------------------------------------------------------------------------
# single-graph analysis and catalog facts


def analyze(g: Multigraph, policy=None) -> dict:
    """Everything the package knows how to say about one graph."""
    out: dict = {"graph": g.to_dict(), "n": g.n, "m": g.m, "cubic": g.is_cubic(),
                 "connected": g.is_connected()}
    mc = g.n >= 2 and is_matching_covered(g)
    out["matching_covered"] = mc
    if not mc:
        return out
    tree = tight_cut_decomposition(g, policy=policy, check=False)
    out["brick"] = tree.is_leaf and not g.is_bipartite()
    out["brace"] = tree.is_leaf and g.is_bipartite()
    out["b"] = len(tree.bricks())
    out["decomposition"] = tree.to_dict()
    if g.is_cubic():
        out["efec"] = is_essentially_4ec_cubic(g)
    if out["brick"] and g.is_cubic():
        relaxed = not out["efec"]
        out["near_bipartite"] = is_near_bipartite(g)
        out["removable_doubletons"] = [list(p) for p in removable_doubletons(g)]
        out["three_edge_colorable"] = is_3_edge_colorable(g)
        out["snark"] = is_snark(g)
        out["edges"] = [c.to_dict() for c in classify_edges(g, relaxed=relaxed)]
        out["verdicts"] = dict(sorted(Counter(c["verdict"] for c in out["edges"]).items()))
        if not relaxed:
            out["census"] = binv_census(g).to_dict()
    return out


def catalog_fact_failures(name: str) -> list[str]:
    """Known facts of a catalog entry that the package does not reproduce."""
    entry = catalog(name)
    g = entry.graph
    facts = entry.known_facts
    bad = []

    def expect(key, actual):
        if key in facts and facts[key] != actual:
            bad.append(f"{name}: {key} expected {facts[key]!r}, got {actual!r}")

    if not g.is_connected():
        bad.append(f"{name}: not connected")
    expect("cubic", g.is_cubic())
    expect("matching_covered", is_matching_covered(g))
    if "bicritical" in facts:
        expect("bicritical", is_bicritical(g))
    expect("brick", is_brick(g))
    if "brace" in facts:
        expect("brace", is_brace(g))
    if g.is_cubic():
        expect("efec", is_essentially_4ec_cubic(g))
    if is_matching_covered(g):
        tree = tight_cut_decomposition(g)
        expect("b", len(tree.bricks()))
        if "leaves" in facts:
            if sorted(facts["leaves"]) != _leaf_names(t.graph for t in tree.leaves()):
                bad.append(f"{name}: leaves differ from {facts['leaves']}")
    if not is_brick(g) or not g.is_cubic():
        return bad
    relaxed = not is_essentially_4ec_cubic(g)
    classes = classify_edges(g, relaxed=relaxed)
    removable = [c for c in classes if c.verdict not in (DOUBLETON, NON_REMOVABLE)]
    expect("removable_edges", len(removable))
    expect("removable_doubletons", len(removable_doubletons(g)))
    expect("near_bipartite", is_near_bipartite(g))
    expect("three_edge_colorable", is_3_edge_colorable(g))
    expect("snark", is_snark(g))
    expect("quasi_b_invariant_edges", sum(1 for c in classes if c.verdict == QUASI))
    expect("b_invariant_edges", sum(1 for c in classes if c.verdict == B_INVARIANT))
    expect("removable_b_values", sorted(c.b for c in removable))
    if "removable" in entry.marks:
        want = sorted(entry.edge(a, b) for a, b in entry.marks["removable"])
        if sorted(c.edge for c in removable) != want:
            bad.append(f"{name}: removable edges differ from the marked ones")
    if "edge_classes" in facts:
        for pair, verdict in facts["edge_classes"].items():
            a, b = pair.split("-")
            got = classify_edge(g, entry.edge(a, b), relaxed).verdict
            if got != verdict:
                bad.append(f"{name}: edge {pair} expected {verdict}, got {got}")
    if "outcome_at_v" in facts:
        out = two_qbinv_vertex_outcome(g, entry.vertex(entry.marks["v"]))
        expect("outcome_at_v", out.outcome)
        if not out.isomorphism_ok:
            bad.append(f"{name}: outcome at v not confirmed by isomorphism")
    if "marked_b" in facts:
        e = entry.edge(*entry.marks["e"])
        c = classify_edge(g, e, relaxed=True)
        expect("marked_removable", c.verdict not in (DOUBLETON, NON_REMOVABLE))
        expect("marked_b", c.b)
        if c.tree is not None:
            expect("marked_leaves", _leaf_names(c.tree.bricks()))
    if "nontrivial_3_cuts" in facts:
        from .graph import enumerate_small_edge_cuts
        k = sum(1 for c in enumerate_small_edge_cuts(g, 3) if c.size == 3 and not c.is_trivial)
        expect("nontrivial_3_cuts", k)
    return bad


def _leaf_names(graphs) -> list[str]:
    forms = {certificate_key(canonical_form(catalog(n).graph)): n for n in ("k4", "k33", "c6bar", "petersen")}
    out = []
    for h in graphs:
        key = certificate_key(canonical_form(underlying_simple(h)))
        out.append(forms.get(key, key))
    return sorted(out)


def all_catalog_failures() -> list[str]:
    return [msg for name in NAMES for msg in catalog_fact_failures(name)]
