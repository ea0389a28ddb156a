"""Canonical forms for multigraphs by colour refinement and individualisation.

The certificate is the lexicographically smallest edge multiset over all
leaves of the search tree.  Automorphisms found along the way prune
branches whose first vertex lies in an orbit that was already explored.
Vertex labels are ignored.
"""

from __future__ import annotations

from collections import Counter

from .graph import Multigraph

Certificate = tuple


def _refine(colors: list[int], adj: list[list[tuple[int, int]]]) -> list[int]:
    count = len(set(colors))
    while True:
        sigs = [
            (colors[v], tuple(sorted((colors[w], m) for w, m in adj[v])))
            for v in range(len(colors))
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [rank[s] for s in sigs]
        if len(rank) == count:
            return new
        colors, count = new, len(rank)


def _individualize(colors: list[int], v: int) -> list[int]:
    sigs = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
    rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
    return [rank[s] for s in sigs]


def _search(g: Multigraph):
    verts = g.sorted_vertices()
    idx = {v: i for i, v in enumerate(verts)}
    n = len(verts)
    mult: Counter = Counter()
    for u, v in g.edges.values():
        a, b = idx[u], idx[v]
        mult[(min(a, b), max(a, b))] += 1
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (a, b), m in mult.items():
        adj[a].append((b, m))
        adj[b].append((a, m))
    start = _refine([sum(m for _, m in adj[v]) for v in range(n)], adj)

    best: dict = {"cert": None, "perm": None}
    autos: list[list[int]] = []

    def leaf(colors):
        cert = tuple(sorted(
            (min(colors[a], colors[b]), max(colors[a], colors[b]), m) for (a, b), m in mult.items()
        ))
        if best["cert"] is None or cert < best["cert"]:
            best["cert"], best["perm"] = cert, colors
        elif cert == best["cert"]:
            inv = {c: v for v, c in enumerate(best["perm"])}
            autos.append([inv[colors[v]] for v in range(n)])

    def dfs(colors, fixed):
        sizes = Counter(colors)
        target = min((c for c, k in sizes.items() if k > 1), default=None)
        if target is None:
            leaf(colors)
            return
        cell = [v for v in range(n) if colors[v] == target]
        done: list[int] = []
        for v in cell:
            if any(v in _orbit_of(u, autos, fixed) for u in done):
                continue
            done.append(v)
            dfs(_refine(_individualize(colors, v), adj), fixed + [v])

    dfs(start, [])
    return n, best["cert"], best["perm"], verts


def _orbit_of(v: int, autos: list[list[int]], fixed: list[int]) -> set[int]:
    usable = [a for a in autos if all(a[p] == p for p in fixed)]
    orbit = {v}
    frontier = [v]
    while frontier:
        x = frontier.pop()
        for a in usable:
            y = a[x]
            if y not in orbit:
                orbit.add(y)
                frontier.append(y)
    return orbit


def canonical_form(g: Multigraph) -> Certificate:
    """Hashable certificate; equal iff the multigraphs are isomorphic."""
    n, cert, _, _ = _search(g)
    return (n, cert or ())


def canonical_labeling(g: Multigraph) -> dict[int, int]:
    """Map from vertex id to its position in the canonical order."""
    _, _, perm, verts = _search(g)
    if perm is None:
        return {}
    return {verts[i]: perm[i] for i in range(len(verts))}


def is_isomorphic(g1: Multigraph, g2: Multigraph) -> bool:
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if sorted(g1.degree(v) for v in g1.vertices) != sorted(g2.degree(v) for v in g2.vertices):
        return False
    return canonical_form(g1) == canonical_form(g2)


def certificate_key(cert: Certificate) -> str:
    """Compact string form of a certificate, used for sorting and reporting."""
    n, edges = cert
    return f"{n}:" + ",".join(f"{a}-{b}" + (f"x{m}" if m > 1 else "") for a, b, m in edges)
