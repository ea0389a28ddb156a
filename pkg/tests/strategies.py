"""Hypothesis strategies for small graphs."""

from hypothesis import strategies as st

from mcgraph.graph import Multigraph


@st.composite
def simple_graphs(draw, min_n=1, max_n=9):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Multigraph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def multigraphs(draw, min_n=2, max_n=8, max_m=16):
    n = draw(st.integers(min_n, max_n))
    pair = st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda p: p[0] != p[1])
    edges = draw(st.lists(pair, max_size=max_m))
    return Multigraph.from_edges(n, edges)


@st.composite
def permutations_of(draw, g):
    verts = g.sorted_vertices()
    perm = draw(st.permutations(verts))
    return dict(zip(verts, perm))
