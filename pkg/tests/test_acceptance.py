"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import random

import pytest

from mcgraph.bricks import (
    QUASI, classify_edge, classify_edges, is_cubic_brick, is_essentially_4ec_cubic, is_removable, is_snark,
    removable_doubletons, two_qbinv_vertex_outcome,
)
from mcgraph.catalog import catalog
from mcgraph.corpus import Corpus, connected_graphs_up_to, random_graph
from mcgraph.graph import underlying_simple
from mcgraph.iso import canonical_form, is_isomorphic
from mcgraph.matching import brute_force_matching_number, is_bicritical, matching_number
from mcgraph.tightcuts import is_brick, tight_cut_decomposition
from mcgraph.verify import (
    VerifyOptions, all_catalog_failures, build_corpus, random_mc_sample, verify_theorem,
)

SMALL = (4, 6, 8, 10)
UP_TO_12 = (4, 6, 8, 10, 12)


@pytest.fixture
def record(capsys):
    def emit(k, ok, detail):
        with capsys.disabled():
            print(f"\ncriterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}")
        return ok
    return emit


def with_catalog(corpus, *names):
    extra = tuple(catalog(n).graph for n in names)
    return Corpus(corpus.source + "".join(f"+catalog({n})" for n in names), corpus.graphs + extra, "raw")


def summary(rep):
    return f"{rep.theorem}: checked={rep.checked} failed={rep.failed}"


def test_criterion_01_oracle_gates(record):
    bad = 0
    count = 0
    for g in connected_graphs_up_to(8):
        count += 1
        bad += matching_number(g) != brute_force_matching_number(g)
    rng = random.Random(2024)
    for _ in range(1000):
        g = random_graph(10, rng.uniform(0.1, 0.6), rng)
        bad += matching_number(g) != brute_force_matching_number(g)
    elp = verify_theorem("ORACLE-ELP", build_corpus(SMALL))
    ok = bad == 0 and elp.ok and elp.checked > 0
    record(1, ok, f"matching mismatches={bad} over {count}+1000 graphs; {summary(elp)}")
    assert ok


def test_criterion_02_tight_cuts_are_3_cuts(record):
    rep = verify_theorem("T1.6", build_corpus(UP_TO_12))
    ok = rep.ok and rep.checked == 1 + 2 + 5 + 18 + 81
    record(2, ok, f"{summary(rep)} tight cuts={rep.stats.get('tight cuts')}")
    assert ok


def test_criterion_03_brick_or_brace(record):
    rep = verify_theorem("C1.7", build_corpus(UP_TO_12))
    ok = rep.ok and rep.checked > 0
    record(3, ok, f"{summary(rep)} {rep.stats}")
    assert ok


def test_criterion_04_edge_trichotomy(record):
    corpus = build_corpus(UP_TO_12)
    a = verify_theorem("T1.8", corpus)
    b = verify_theorem("C1.12", corpus)
    ok = a.ok and b.ok and a.checked == b.checked > 0
    record(4, ok, f"{summary(a)}; {summary(b)} {b.stats}")
    assert ok


def test_criterion_05_b_values(record):
    rep = verify_theorem("T1.10", build_corpus(UP_TO_12))
    ok = rep.ok and rep.checked > 0
    record(5, ok, f"{summary(rep)} {rep.stats}")
    assert ok


def test_criterion_06_petersen(record, petersen, k4):
    classes = classify_edges(petersen)
    all_quasi = len(classes) == 15 and all(c.verdict == QUASI for c in classes)
    two_k4 = all(
        len(c.tree.bricks()) == 2 and all(is_isomorphic(underlying_simple(h), k4) for h in c.tree.bricks())
        for c in classes
    )
    snark = is_snark(petersen) and all(is_removable(petersen, e) for e in petersen.edges)
    ok = all_quasi and two_k4 and snark
    record(6, ok, f"all quasi={all_quasi} two K4 bricks={two_k4} snark with all edges removable={snark}")
    assert ok


def test_criterion_07_two_quasi_edges_at_a_vertex(record):
    corpus = build_corpus((10, 12))
    rep = verify_theorem("T1.11", corpus)
    pet = canonical_form(catalog("petersen").graph)
    cube = canonical_form(catalog("cubeplex").graph)
    realized = {"i": set(), "ii": set(), "iii": set()}
    for g in corpus:
        if not (g.is_cubic() and is_cubic_brick(g) and is_essentially_4ec_cubic(g)):
            continue
        for v in g.sorted_vertices():
            if sum(1 for e in g.incident(v) if classify_edge(g, e).verdict == QUASI) >= 2:
                realized[two_qbinv_vertex_outcome(g, v).outcome].add(canonical_form(g))
    f = catalog("fig4")
    fig4 = two_qbinv_vertex_outcome(f.graph, f.vertex("v")).outcome
    ok = rep.ok and realized["ii"] == {pet} and realized["i"] == {cube} and fig4 == "iii"
    record(7, ok, f"{summary(rep)} graphs with (i)={len(realized['i'])} (ii)={len(realized['ii'])} "
                  f"(iii)={len(realized['iii'])}; fig4 outcome={fig4}")
    assert ok


def test_criterion_08_b_invariant_census(record):
    corpus = with_catalog(build_corpus(UP_TO_12), "fig4")
    a = verify_theorem("C1.13", corpus)
    b = verify_theorem("C1.14", corpus)
    ok = a.ok and b.ok and a.checked > 0
    record(8, ok, f"{summary(a)}; {summary(b)} {b.stats}")
    assert ok


def test_criterion_09_catalog_regression(record, k4, k33):
    checks = {}
    for name in ("k4", "c6bar"):
        g = catalog(name).graph
        checks[f"{name} removable=0"] = not any(is_removable(g, e) for e in g.edges)
        checks[f"{name} doubletons=3"] = len(removable_doubletons(g)) == 3
    t = catalog("tricorn")
    rem = [c for c in classify_edges(t.graph, relaxed=True) if c.b is not None]
    checks["tricorn 3 b-invariant removable, not efec"] = (
        len(rem) == 3 and all(c.b == 1 for c in rem) and not is_essentially_4ec_cubic(t.graph)
        and sorted(c.edge for c in rem) == sorted(t.edge(a, b) for a, b in t.marks["removable"]))
    tree = tight_cut_decomposition(catalog("fig1").graph)
    checks["fig1 -> K4 + K3,3, b=1"] = (
        sorted(canonical_form(underlying_simple(x.graph)) for x in tree.leaves())
        == sorted([canonical_form(k4), canonical_form(k33)]) and len(tree.bricks()) == 1)
    fig3 = catalog("fig3").graph
    tree = tight_cut_decomposition(fig3)
    checks["fig3 bicritical non-brick, two K4"] = (
        is_bicritical(fig3) and not is_brick(fig3) and len(tree.bricks()) == 2
        and all(is_isomorphic(underlying_simple(h), k4) for h in tree.bricks()))
    for name in ("fig5-left", "fig5-right"):
        e = catalog(name)
        c = [x for x in classify_edges(e.graph, relaxed=True) if x.edge == e.edge(*e.marks["e"])][0]
        checks[f"{name} marked edge b=3, three K4"] = (
            c.b == 3 and len(c.tree.bricks()) == 3
            and all(is_isomorphic(underlying_simple(h), k4) for h in c.tree.bricks()))
    failed = [k for k, v in checks.items() if not v] + all_catalog_failures()
    ok = not failed
    record(9, ok, f"{len(checks) - len(failed)}/{len(checks)} facts" + (f" failed: {failed}" if failed else ""))
    assert ok


def test_criterion_10_decomposition_order_invariance(record):
    graphs = build_corpus(SMALL).graphs + random_mc_sample(200, seed=7).graphs
    rep = verify_theorem("T1.1", Corpus("mixed", graphs, "raw"), VerifyOptions(seed=1, orders=100))
    ok = rep.ok and rep.checked >= 200
    record(10, ok, f"{summary(rep)} orders per graph=100")
    assert ok


def test_criterion_11_property_sweeps(record):
    cubic12 = build_corpus(UP_TO_12)
    bricks_plus = with_catalog(cubic12, "fig4")
    mixed = Corpus("cubic<=12+random", cubic12.graphs + random_mc_sample(200, seed=11).graphs, "raw")
    reports = [
        verify_theorem("L1.5", mixed),
        verify_theorem("P3.4", cubic12),
        verify_theorem("P3.5-3.9", bricks_plus),
        verify_theorem("L3.6", cubic12),
        verify_theorem("L4.1", cubic12),
        verify_theorem("L4.5", bricks_plus),
    ]
    ok = all(r.ok and r.checked > 0 for r in reports)
    record(11, ok, "; ".join(summary(r) for r in reports))
    assert ok
