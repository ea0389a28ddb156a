import itertools

import pytest

from mcgraph.bricks import (
    B_INVARIANT, DOUBLETON, NON_REMOVABLE, ONE_BARRIER, QUASI, REMOVABLE_OTHER, TWO_BARRIER,
    binv_census, classify_edge, classify_edges, enumerate_barriers, four_cut_violations,
    is_3_edge_colorable, is_essentially_4ec_cubic, is_inflexible, is_near_bipartite, is_removable,
    is_snark, qbinv_structure, removable_doubletons, removable_structure, structure_violations,
    two_qbinv_vertex_outcome,
)
from mcgraph.catalog import catalog
from mcgraph.graph import GraphError, Multigraph, enumerate_small_edge_cuts
from mcgraph.iso import is_isomorphic
from mcgraph.matching import enumerate_perfect_matchings, is_matching_covered
from mcgraph.tightcuts import b_count


def test_efec_examples(petersen, prism):
    assert is_essentially_4ec_cubic(petersen)
    assert not is_essentially_4ec_cubic(prism)
    tricorn = catalog("tricorn").graph
    assert not is_essentially_4ec_cubic(tricorn)
    e = catalog("tricorn")
    hub = {e.vertex(x) for x in ("h90", "o70", "o110")}
    assert any(c.shore == hub or c.complement == hub for c in enumerate_small_edge_cuts(tricorn, 3))


def test_removable_examples(k4, petersen):
    assert not any(is_removable(k4, e) for e in k4.edges)
    assert all(is_removable(petersen, e) for e in petersen.edges)
    e = catalog("tricorn")
    want = sorted(e.edge(a, b) for a, b in e.marks["removable"])
    assert [f for f in sorted(e.graph.edges) if is_removable(e.graph, f)] == want


def _doubletons_brute(g):
    out = []
    for e, f in itertools.combinations(sorted(g.edges), 2):
        h = g.delete_edges(e, f)
        if h.is_bipartite() and is_matching_covered(h):
            out.append((e, f))
    return out


@pytest.mark.parametrize("name,count", [("k4", 3), ("c6bar", 3), ("petersen", 0), ("cubeplex", 1)])
def test_doubleton_counts(name, count):
    g = catalog(name).graph
    got = removable_doubletons(g)
    assert got == _doubletons_brute(g)
    assert len(got) == count
    pms = list(enumerate_perfect_matchings(g))
    for e, f in got:
        assert all((e in m) == (f in m) for m in pms)


def test_doubletons_need_a_brick():
    with pytest.raises(GraphError):
        removable_doubletons(catalog("fig1").graph)


def test_near_bipartite_examples(k4, petersen):
    assert is_near_bipartite(k4)
    assert not is_near_bipartite(petersen)
    assert is_near_bipartite(catalog("cubeplex").graph)


def test_classification_examples(petersen):
    assert {c.verdict for c in classify_edges(petersen)} == {QUASI}
    e = catalog("fig4")
    assert classify_edge(e.graph, e.edge("v", "u1")).verdict == QUASI
    assert classify_edge(e.graph, e.edge("v", "u2")).verdict == QUASI
    assert classify_edge(e.graph, e.edge("v", "u3")).verdict == B_INVARIANT
    f = catalog("fig5-left")
    c = classify_edge(f.graph, f.edge(*f.marks["e"]), relaxed=True)
    assert c.verdict == REMOVABLE_OTHER and c.b == 3


def test_classification_needs_efec_unless_relaxed(prism):
    with pytest.raises(GraphError):
        classify_edge(prism, 0)
    with pytest.raises(GraphError):
        classify_edge(catalog("k33").graph, 0, relaxed=True)
    verdicts = {c.verdict for c in classify_edges(prism, relaxed=True)}
    assert verdicts == {DOUBLETON, NON_REMOVABLE}


def test_classification_witnesses(efec_bricks):
    for g in efec_bricks[:8]:
        for c in classify_edges(g):
            if c.verdict == DOUBLETON:
                h = g.delete_edges(c.edge, c.partner)
                assert h.is_bipartite() and is_matching_covered(h)
                assert c.bipartition == h.bipartition()
            elif c.verdict in (B_INVARIANT, QUASI):
                assert is_removable(g, c.edge)
                assert c.b == b_count(g.delete_edges(c.edge)) == len(c.tree.bricks())


def test_edge_colouring(prism, petersen):
    assert is_3_edge_colorable(prism)
    assert not is_3_edge_colorable(petersen)
    assert is_snark(petersen) and not is_snark(prism)
    with pytest.raises(GraphError):
        is_3_edge_colorable(Multigraph.from_edges(3, [(0, 1), (1, 2)]))


def _colourable_brute(g):
    ids = sorted(g.edges)
    for cols in itertools.product(range(3), repeat=len(ids) - 1):
        colour = dict(zip(ids, (0,) + cols))
        if all(len({colour[f] for f in g.incident(v)}) == 3 for v in g.vertices):
            return True
    return False


def test_edge_colouring_matches_brute_force(cubic):
    for n in (4, 6, 8):
        for g in cubic[n]:
            assert is_3_edge_colorable(g) == _colourable_brute(g)


def test_near_bipartite_bricks_are_colourable(efec_bricks):
    for g in efec_bricks:
        if is_near_bipartite(g):
            assert is_3_edge_colorable(g)


# -- structure -------------------------------------------------------------------------

def test_petersen_structure(petersen, k4):
    for e in petersen.edges:
        st = qbinv_structure(petersen, e)
        assert st.case == TWO_BARRIER and st.b == 2
        assert len(st.B) == len(st.Bp) == 2 and len(st.L) == len(st.Lp) == 2
        assert is_isomorphic(st.J, k4) and is_isomorphic(st.Jp, k4)
        assert structure_violations(petersen, st) == []


def test_cubeplex_structure_at_v():
    e = catalog("cubeplex")
    v = e.vertex("v")
    st = qbinv_structure(e.graph, e.edge("v", "u1"), v)
    assert sorted(st.B) == sorted([e.vertex("u2"), e.vertex("u3")])
    assert structure_violations(e.graph, st) == []


def test_fig4_binvariant_structure():
    e = catalog("fig4")
    f = e.edge("v", "u3")
    for v in e.graph.ends(f):
        st = removable_structure(e.graph, f, v)
        assert st.b == 1 and st.L is None


def test_structure_case_matches_b(efec_bricks):
    seen = set()
    for g in efec_bricks:
        for c in classify_edges(g):
            if c.verdict not in (B_INVARIANT, QUASI):
                continue
            for v in g.ends(c.edge):
                st = removable_structure(g, c.edge, v)
                seen.add(st.case)
                assert st.b == c.b
                assert len(st.I) == len(st.B) - 1
                if st.case == ONE_BARRIER:
                    assert st.H.degree(st.x) == 5
                else:
                    assert st.H.degree(st.x) == st.H.degree(st.xp) == 4
    assert seen == {ONE_BARRIER, TWO_BARRIER}


def test_structure_errors(k4, prism):
    with pytest.raises(GraphError):
        removable_structure(prism, 0)
    e = catalog("fig4")
    with pytest.raises(GraphError):
        qbinv_structure(e.graph, e.edge("v", "u3"))
    with pytest.raises(GraphError):
        removable_structure(e.graph, e.edge("v", "u1"), e.vertex("P"))


# -- flexibility -----------------------------------------------------------------------

def test_k4_is_inflexible(k4):
    for e in k4.edges:
        rep = is_inflexible(k4, e)
        assert rep.inflexible and rep.doubletons_hold and rep.xx_admissible_hold


@pytest.mark.parametrize("name", ["petersen", "cubeplex"])
def test_flexible_bricks_have_all_pairs(name):
    g = catalog(name).graph
    pms = list(enumerate_perfect_matchings(g))
    for xx in g.edges:
        rep = is_inflexible(g, xx)
        assert not rep.inflexible and rep.flexible_pairs_hold
        for p in (rep.d, rep.f):
            for q in (rep.dp, rep.fp):
                assert any(p in m and q in m for m in pms)


def test_flexibility_preconditions(prism):
    with pytest.raises(GraphError):
        is_inflexible(prism, 0)
    with pytest.raises(GraphError):
        is_inflexible(catalog("k33").graph, 0)


# -- outcomes and census ---------------------------------------------------------------------

def test_vertex_outcomes(petersen):
    assert {two_qbinv_vertex_outcome(petersen, v).outcome for v in petersen.vertices} == {"ii"}
    c = catalog("cubeplex")
    out = two_qbinv_vertex_outcome(c.graph, c.vertex("v"))
    assert out.outcome == "i" and out.isomorphism_ok
    f = catalog("fig4")
    out = two_qbinv_vertex_outcome(f.graph, f.vertex("v"))
    assert out.outcome == "iii" and out.isomorphism_ok
    with pytest.raises(GraphError):
        two_qbinv_vertex_outcome(f.graph, f.vertex("a"))


def test_census_examples(petersen):
    cen = binv_census(petersen)
    assert cen.b_invariant_edges == 0 and cen.is_petersen
    f = binv_census(catalog("fig4").graph)
    assert not f.near_bipartite and f.b_invariant_edges == 19 >= 7
    assert f.every_vertex_covered


# -- small lemmas ---------------------------------------------------------------------------

def test_enumerate_barriers_matches_definition():
    g = catalog("fig1").graph
    from mcgraph.matching import is_barrier
    want = [frozenset(s) for r in range(1, g.n + 1) for s in itertools.combinations(g.sorted_vertices(), r)
            if is_barrier(g, s)]
    assert sorted(map(sorted, enumerate_barriers(g))) == sorted(map(sorted, want))


def test_barriers_after_removable_deletion_are_special(petersen):
    from mcgraph.matching import is_special_barrier
    h = petersen.delete_edges(0)
    assert all(is_special_barrier(h, b) for b in enumerate_barriers(h))


def test_four_cut_lemma(efec_bricks):
    assert all(four_cut_violations(g) == [] for g in efec_bricks)
    # the prism is not efec and has a 4-cut cutting off a path of three vertices
    assert four_cut_violations(catalog("c6bar").graph)
