"""Walk through the edges of the Petersen graph.

Every edge is removable, yet deleting any one of them leaves a graph whose
tight cut decomposition has two bricks, both K4.
"""

from mcgraph import catalog, classify_edges, is_snark, underlying_simple
from mcgraph.iso import is_isomorphic

g = catalog("petersen").graph
k4 = catalog("k4").graph
print(f"Petersen: n={g.n} m={g.m} snark={is_snark(g)}")
for c in classify_edges(g):
    a, b = g.ends(c.edge)
    bricks = c.tree.bricks()
    k4s = sum(is_isomorphic(underlying_simple(h), k4) for h in bricks)
    print(f"  edge {a}-{b}: {c.verdict}, b(G-e)={c.b}, K4 bricks={k4s}")
