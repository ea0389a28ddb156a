import itertools

import networkx as nx
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from mcgraph.bricks import enumerate_barriers
from mcgraph.catalog import catalog
from mcgraph.graph import GraphError, Multigraph
from mcgraph.matching import (
    bipartite_inadmissibility_witness, brute_force_matching_number, depends,
    enumerate_perfect_matchings, gallai_edmonds, has_perfect_matching, is_admissible, is_barrier,
    is_bicritical, is_factor_critical, is_matchable_without, is_matching, is_matching_covered,
    is_special_barrier, max_matching, maximal_barrier_containing, mutually_dependent,
    odd_components, perfect_matching, v_matching,
)

from strategies import multigraphs, simple_graphs


def c6_chord():
    """The 6-cycle on 1..6 with the chord 13."""
    return Multigraph(range(1, 7), [(1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 1), (1, 3)])


def star4():
    return Multigraph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def cycle(n):
    return Multigraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def brute_d_set(g):
    """Vertices missed by some maximum matching, by exhaustive search."""
    nu = brute_force_matching_number(g)
    return frozenset(v for v in g.vertices
                     if brute_force_matching_number(g.delete_vertices([v])) == nu)


# -- perfect and maximum matchings -------------------------------------------

def test_small_matchability(k4, petersen):
    assert has_perfect_matching(k4)
    assert not has_perfect_matching(star4())
    assert has_perfect_matching(petersen)
    assert is_matching(petersen, perfect_matching(petersen))


@given(multigraphs(min_n=1, max_n=10, max_m=20))
def test_blossom_agrees_with_exhaustive_search(g):
    m = max_matching(g)
    assert is_matching(g, m)
    assert len(m) == brute_force_matching_number(g)


@settings(max_examples=60)
@given(simple_graphs(max_n=10))
def test_blossom_agrees_with_networkx(g):
    h = nx.Graph(list(g.edges.values()))
    h.add_nodes_from(g.vertices)
    assert len(max_matching(g)) == len(nx.max_weight_matching(h, maxcardinality=True))


@given(multigraphs(min_n=2, max_n=9), st.data())
def test_vertex_deleted_matchability(g, data):
    verts = g.sorted_vertices()
    removed = data.draw(st.sets(st.sampled_from(verts), max_size=4))
    h = g.delete_vertices(removed)
    want = h.n % 2 == 0 and brute_force_matching_number(h) * 2 == h.n
    assert is_matchable_without(g, removed) == want


def test_petersen_has_six_perfect_matchings(petersen):
    assert len(list(enumerate_perfect_matchings(petersen))) == 6


# -- admissibility and matching covered ---------------------------------------

def test_admissibility_examples(petersen, k33):
    assert all(is_admissible(petersen, e) for e in petersen.edges)
    assert all(is_admissible(k33, e) for e in k33.edges)
    g = c6_chord()
    chord = g.edges_between(1, 3)[0]
    assert not is_admissible(g, chord)
    assert not any(chord in m for m in enumerate_perfect_matchings(g))


def test_matching_covered_examples():
    assert is_matching_covered(cycle(6))
    assert not is_matching_covered(c6_chord())
    assert is_matching_covered(catalog("tricorn").graph)
    assert not is_matching_covered(Multigraph.from_edges(4, [(0, 1), (2, 3)]))


@given(multigraphs(min_n=2, max_n=8))
def test_matching_covered_by_enumeration(g):
    pms = list(enumerate_perfect_matchings(g))
    covered = set().union(*pms) if pms else set()
    want = g.is_connected() and g.n >= 2 and bool(pms) and covered == set(g.edges)
    assert is_matching_covered(g) == want


def test_bicritical_examples(petersen, k33):
    assert is_bicritical(catalog("fig3").graph)
    assert not is_bicritical(k33)
    assert is_bicritical(petersen)
    with pytest.raises(GraphError):
        is_bicritical(cycle(5))


def test_factor_critical_examples():
    assert is_factor_critical(cycle(3))
    assert is_factor_critical(Multigraph.from_edges(1, []))
    assert not is_factor_critical(cycle(4))


# -- barriers ----------------------------------------------------------------

def test_barrier_examples(petersen):
    g = c6_chord()
    assert is_barrier(g, {1, 3})
    assert sorted(map(sorted, odd_components(g, {1, 3}))) == [[2], [4, 5, 6]]
    assert all(len(b) == 1 for b in enumerate_barriers(petersen))
    assert len(enumerate_barriers(petersen)) == 10
    e = catalog("fig1")
    bold = {e.vertex(x) for x in "pqr"}
    assert is_barrier(e.graph, bold) and is_special_barrier(e.graph, bold)
    with pytest.raises(GraphError):
        is_barrier(g, set())


@settings(max_examples=80)
@given(simple_graphs(min_n=4, max_n=8))
def test_pairs_matchable_iff_no_common_barrier(g):
    assume(has_perfect_matching(g))
    barriers = enumerate_barriers(g)
    for u, v in itertools.combinations(g.sorted_vertices(), 2):
        shared = any(u in b and v in b for b in barriers)
        assert is_matchable_without(g, (u, v)) == (not shared)
    for e in g.edges:
        u, v = g.ends(e)
        assert is_admissible(g, e) == (not any(u in b and v in b for b in barriers))
    if g.is_connected():
        stable = all(not any(a in b and c in b for a, c in g.edges.values()) for b in barriers)
        assert is_matching_covered(g) == stable


# -- Gallai-Edmonds ------------------------------------------------------------

def test_gallai_edmonds_examples():
    s = gallai_edmonds(cycle(6))
    assert not s.D and not s.A and s.C == frozenset(range(6))
    s = gallai_edmonds(star4())
    assert s.D == {1, 2, 3} and s.A == {0} and not s.C
    h = c6_chord().delete_vertices([1, 3])
    s = gallai_edmonds(h)
    assert s.deficiency == 2 == h.n - 2 * brute_force_matching_number(h)
    assert s.D == brute_d_set(h) == {2, 4, 6}
    assert s.A == {5}


@given(multigraphs(min_n=1, max_n=9))
def test_gallai_edmonds_structure(g):
    s = gallai_edmonds(g)
    assert s.D == brute_d_set(g)
    assert s.deficiency == g.n - 2 * brute_force_matching_number(g)
    comps = g.components(s.D)
    assert s.deficiency == len(comps) - len(s.A)
    assert all(is_factor_critical(g.subgraph(c)) for c in comps)


def test_maximal_barrier_examples(petersen):
    assert all(maximal_barrier_containing(petersen, u, w) is None
               for u, w in itertools.combinations(range(10), 2))
    g = c6_chord()
    # 2, 4 and 6 are left isolated once 1, 3 and 5 go, so the pair itself is not maximal
    above = [b for b in enumerate_barriers(g) if b >= {1, 3}]
    assert sorted(map(sorted, above)) == [[1, 3], [1, 3, 5]]
    assert maximal_barrier_containing(g, 1, 3) == {1, 3, 5}
    with pytest.raises(GraphError):
        maximal_barrier_containing(g, 1, 1)


def test_maximal_barrier_in_prism_minus_rung(prism):
    e = catalog("c6bar")
    h = prism.delete_edges(e.edge("a1", "a2"))
    u, w = e.vertex("b1"), e.vertex("b2")
    b = maximal_barrier_containing(h, u, w)
    every = enumerate_barriers(h)
    if is_matchable_without(h, (u, w)):
        assert b is None
    else:
        assert len(b) >= 2 and b in every and not any(c > b for c in every)


@settings(max_examples=80)
@given(simple_graphs(min_n=4, max_n=8))
def test_maximal_barrier_is_maximal(g):
    assume(has_perfect_matching(g))
    every = enumerate_barriers(g)
    for u, w in itertools.combinations(g.sorted_vertices(), 2):
        b = maximal_barrier_containing(g, u, w)
        if b is None:
            assert is_matchable_without(g, (u, w))
            continue
        assert {u, w} <= b and b in every
        assert not any(c > b for c in every)


# -- v-matchings and dependence -----------------------------------------------

def _is_v_matching(g, v, m):
    count = {w: 0 for w in g.vertices}
    for e in m:
        for w in g.ends(e):
            count[w] += 1
    return count[v] == 3 and all(c == 1 for w, c in count.items() if w != v)


def test_v_matchings(k4, prism, petersen):
    assert v_matching(k4, 0) == frozenset(k4.incident(0))
    for g in (prism, petersen):
        for v in g.vertices:
            m = v_matching(g, v)
            assert m is not None and _is_v_matching(g, v, m)
    with pytest.raises(GraphError):
        v_matching(star4(), 0)


def test_dependence_examples(k4, petersen, prism):
    e12, e34 = k4.edges_between(0, 1)[0], k4.edges_between(2, 3)[0]
    assert depends(k4, e12, e34)
    pms = list(enumerate_perfect_matchings(petersen))
    for e, f in itertools.permutations(petersen.edges, 2):
        if set(petersen.ends(e)) & set(petersen.ends(f)):
            continue
        brute = all(f in m for m in pms if e in m)
        assert brute is False
        assert depends(petersen, e, f) is False
    c = catalog("c6bar")
    for x, y in (("a", "b"), ("b", "c"), ("a", "c")):
        e, f = c.edge(x + "1", y + "1"), c.edge(x + "2", y + "2")
        assert mutually_dependent(prism, e, f)
        pms = list(enumerate_perfect_matchings(prism))
        assert all((e in m) == (f in m) for m in pms)


def test_depends_rejects_inadmissible():
    g = c6_chord()
    chord = g.edges_between(1, 3)[0]
    with pytest.raises(GraphError):
        depends(g, chord, g.edges_between(4, 5)[0])


@given(multigraphs(min_n=4, max_n=8), st.data())
def test_depends_by_enumeration(g, data):
    pms = list(enumerate_perfect_matchings(g))
    assume(pms)
    ids = sorted(g.edges)
    e = data.draw(st.sampled_from(sorted(set().union(*pms))))
    f = data.draw(st.sampled_from(ids).filter(lambda x: x != e))
    assert depends(g, e, f) == all(f in m for m in pms if e in m)


# -- bipartite witness -------------------------------------------------------------

def test_witness_examples(k33):
    assert all(bipartite_inadmissibility_witness(k33, e) is None for e in k33.edges)
    # a1=0 b1=1 a2=2 b2=3: path a1-b1-a2-b2 plus a1-b2
    g = Multigraph.from_edges(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    for e in g.edges:
        assert (bipartite_inadmissibility_witness(g, e) is None) == is_admissible(g, e)
    with pytest.raises(GraphError):
        bipartite_inadmissibility_witness(cycle(3), 0)


@st.composite
def bipartite_graphs(draw):
    k = draw(st.integers(1, 5))
    pairs = [(i, k + j) for i in range(k) for j in range(k)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Multigraph.from_edges(2 * k, [p for p, x in zip(pairs, keep) if x])


@given(bipartite_graphs())
def test_witness_iff_inadmissible(h):
    assume(has_perfect_matching(h))
    for e in h.edges:
        w = bipartite_inadmissibility_witness(h, e)
        assert (w is None) == is_admissible(h, e)
        if w is not None:
            a1, a2, b1, b2 = w
            a, b = h.ends(e)
            assert a in a2 and b in b1 and len(a1) == len(b1)
            assert not any((p in a1 and q in b2) or (q in a1 and p in b2) for p, q in h.edges.values())
