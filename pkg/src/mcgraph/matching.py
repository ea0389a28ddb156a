"""Perfect matchings, barriers and the Gallai-Edmonds split.

Maximum matchings come from Edmonds' blossom algorithm.  Each graph keeps
one maximum matching in its cache; queries about vertex-deleted subgraphs
start from that matching with the deleted vertices' pairs dropped, so a
typical query needs one or two augmenting-path searches.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .graph import GraphError, Multigraph


# ---------------------------------------------------------------------------
# blossom core


class _Index:
    """Dense-index view of a multigraph for the blossom search."""

    __slots__ = ("verts", "idx", "adj", "edge_of", "n")

    def __init__(self, g: Multigraph):
        self.verts = g.sorted_vertices()
        self.idx = {v: i for i, v in enumerate(self.verts)}
        self.n = len(self.verts)
        nbrs: list[set[int]] = [set() for _ in range(self.n)]
        self.edge_of: dict[tuple[int, int], int] = {}
        for e in sorted(g.edges):
            u, v = g.edges[e]
            a, b = self.idx[u], self.idx[v]
            nbrs[a].add(b)
            nbrs[b].add(a)
            self.edge_of.setdefault((a, b), e)
            self.edge_of.setdefault((b, a), e)
        self.adj = [sorted(s) for s in nbrs]


def _index(g: Multigraph) -> _Index:
    ix = g._cache.get("index")
    if ix is None:
        ix = g._cache["index"] = _Index(g)
    return ix


def _augment_from(root: int, ix: _Index, match: list[int], alive: list[bool]) -> bool:
    """Search for an augmenting path from the exposed vertex ``root``; apply it if found."""
    n = ix.n
    adj = ix.adj
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, inblossom: list[bool]) -> None:
        while base[v] != b:
            inblossom[base[v]] = inblossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    used[root] = True
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for to in adj[v]:
            if not alive[to] or base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = lca(v, to)
                inblossom = [False] * n
                mark_path(v, cur, to, inblossom)
                mark_path(to, cur, v, inblossom)
                for i in range(n):
                    if inblossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    # flip the path ending at ``to``
                    x = to
                    while x != -1:
                        px = parent[x]
                        nxt = match[px]
                        match[x] = px
                        match[px] = x
                        x = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def _full_matching(g: Multigraph) -> list[int]:
    m = g._cache.get("mate")
    if m is None:
        ix = _index(g)
        match = [-1] * ix.n
        alive = [True] * ix.n
        # greedy start, then augment from every exposed vertex once
        for v in range(ix.n):
            if match[v] == -1:
                for w in ix.adj[v]:
                    if match[w] == -1:
                        match[v], match[w] = w, v
                        break
        for v in range(ix.n):
            if match[v] == -1:
                _augment_from(v, ix, match, alive)
        m = g._cache["mate"] = match
    return m


def _mate_without(g: Multigraph, removed: Iterable[int], stop_on_failure: bool = False):
    """Maximum matching of g - removed as a mate list, plus the alive mask.

    With ``stop_on_failure`` the search returns None as soon as some exposed
    vertex cannot be augmented, which certifies that g - removed has no
    perfect matching.
    """
    ix = _index(g)
    match = list(_full_matching(g))
    alive = [True] * ix.n
    for v in removed:
        i = ix.idx[v]
        alive[i] = False
    for i in range(ix.n):
        if not alive[i] and match[i] != -1:
            j = match[i]
            match[j] = -1
            match[i] = -1
    if stop_on_failure and sum(alive) % 2:
        return None
    for i in range(ix.n):
        if alive[i] and match[i] == -1:
            if not _augment_from(i, ix, match, alive) and stop_on_failure:
                return None
    return match, alive


def _edges_of(ix: _Index, match: list[int]) -> frozenset[int]:
    return frozenset(ix.edge_of[(i, j)] for i, j in enumerate(match) if j > i)


# ---------------------------------------------------------------------------
# public matching queries


def max_matching(g: Multigraph) -> frozenset[int]:
    """A maximum matching as a set of edge ids."""
    return _edges_of(_index(g), _full_matching(g))


def matching_number(g: Multigraph) -> int:
    return sum(1 for i, j in enumerate(_full_matching(g)) if j > i)


def has_perfect_matching(g: Multigraph) -> bool:
    return 2 * matching_number(g) == g.n


def perfect_matching(g: Multigraph) -> frozenset[int] | None:
    return max_matching(g) if has_perfect_matching(g) else None


def is_matchable_without(g: Multigraph, removed: Iterable[int]) -> bool:
    """True iff g minus the vertex set ``removed`` has a perfect matching."""
    return _mate_without(g, removed, stop_on_failure=True) is not None


def perfect_matching_without(g: Multigraph, removed: Iterable[int]) -> frozenset[int] | None:
    res = _mate_without(g, removed, stop_on_failure=True)
    if res is None:
        return None
    return _edges_of(_index(g), res[0])


def matching_number_without(g: Multigraph, removed: Iterable[int]) -> int:
    match, alive = _mate_without(g, removed)
    return sum(1 for i, j in enumerate(match) if j > i)


def perfect_matching_containing(g: Multigraph, e: int) -> frozenset[int] | None:
    u, v = g.ends(e)
    rest = perfect_matching_without(g, (u, v))
    return None if rest is None else rest | {e}


def is_admissible(g: Multigraph, e: int) -> bool:
    u, v = g.ends(e)
    return is_matchable_without(g, (u, v))


def is_matching_covered(g: Multigraph) -> bool:
    if g.n < 2 or not g.is_connected():
        return False
    if not has_perfect_matching(g):
        return False
    # edges of the cached perfect matching are admissible for free
    known = max_matching(g)
    return all(e in known or is_admissible(g, e) for e in g.edges)


def is_bicritical(g: Multigraph) -> bool:
    if g.n % 2:
        raise GraphError("bicriticality needs an even number of vertices")
    if g.n < 4:
        raise GraphError("bicriticality needs at least four vertices")
    vs = g.sorted_vertices()
    return all(is_matchable_without(g, (u, w)) for i, u in enumerate(vs) for w in vs[i + 1:])


def is_factor_critical(g: Multigraph) -> bool:
    if g.n % 2 == 0:
        return False
    return all(is_matchable_without(g, (v,)) for v in g.vertices)


# ---------------------------------------------------------------------------
# barriers


def odd_components(g: Multigraph, s: Iterable[int]) -> list[frozenset[int]]:
    rest = g.vertices - set(s)
    return [c for c in g.components(rest) if len(c) % 2]


def is_barrier(g: Multigraph, s: Iterable[int]) -> bool:
    s = frozenset(s)
    if not s:
        raise GraphError("barrier candidate is empty")
    if not s <= g.vertices:
        raise GraphError("barrier candidate has unknown vertices")
    return len(odd_components(g, s)) == len(s)


def is_special_barrier(g: Multigraph, s: Iterable[int]) -> bool:
    """Barrier whose removal leaves exactly one nontrivial component and no even ones."""
    s = frozenset(s)
    if not is_barrier(g, s):
        return False
    comps = g.components(g.vertices - s)
    if any(len(c) % 2 == 0 for c in comps):
        return False
    return sum(1 for c in comps if len(c) > 1) == 1


def isolated_vertices(g: Multigraph, s: Iterable[int]) -> frozenset[int]:
    """Vertices forming singleton components of g - s."""
    comps = g.components(g.vertices - set(s))
    return frozenset(next(iter(c)) for c in comps if len(c) == 1)


@dataclass(frozen=True)
class GallaiEdmondsSplit:
    D: frozenset[int]
    A: frozenset[int]
    C: frozenset[int]
    deficiency: int


GalluiEdmondsSplit = GallaiEdmondsSplit


def gallai_edmonds(g: Multigraph) -> GallaiEdmondsSplit:
    ix = _index(g)
    match = _full_matching(g)
    nu = sum(1 for i, j in enumerate(match) if j > i)
    d = set()
    for i, v in enumerate(ix.verts):
        if match[i] == -1:
            d.add(v)
            continue
        # an augmenting path for M - vw in g - v must start at w
        trial = list(match)
        w = trial[i]
        trial[i] = trial[w] = -1
        alive = [True] * ix.n
        alive[i] = False
        if _augment_from(w, ix, trial, alive):
            d.add(v)
    d = frozenset(d)
    a = frozenset(w for v in d for w in g.neighbors(v) if w not in d)
    c = g.vertices - d - a
    return GallaiEdmondsSplit(d, a, c, g.n - 2 * nu)


def maximal_barrier_containing(g: Multigraph, u: int, w: int) -> frozenset[int] | None:
    """A maximal barrier containing u and w, or None when g - u - w is matchable.

    Starts from {u, w} plus the A-set of g - u - w, then grows while some
    component of g - S is even (add its smallest vertex) or is odd but not
    factor-critical (add its A-set).  The loop ends with every component odd
    and factor-critical, which makes S maximal.
    """
    if u == w:
        raise GraphError("barrier pair must be two distinct vertices")
    if not has_perfect_matching(g):
        raise GraphError("host graph is not matchable")
    if is_matchable_without(g, (u, w)):
        return None
    h = g.delete_vertices((u, w))
    s = {u, w} | gallai_edmonds(h).A
    while True:
        grown = False
        for comp in g.components(g.vertices - s):
            if len(comp) % 2 == 0:
                s.add(min(comp))
                grown = True
                break
            sub = g.subgraph(comp)
            if not is_factor_critical(sub):
                extra = gallai_edmonds(sub).A
                if not extra:
                    raise AssertionError("odd non-critical component with empty A-set")
                s |= extra
                grown = True
                break
        if not grown:
            break
    s = frozenset(s)
    assert is_barrier(g, s)
    return s


# ---------------------------------------------------------------------------
# v-matchings and dependence


def v_matching(g: Multigraph, v: int) -> frozenset[int] | None:
    """Edges covering v three times and every other vertex once, if any."""
    if not g.is_cubic():
        raise GraphError("v-matchings are defined for cubic graphs")
    star = g.incident(v)
    nbrs = g.neighbors(v)
    if len(nbrs) != 3:
        return None
    rest = perfect_matching_without(g, [v, *nbrs])
    return None if rest is None else frozenset(star) | rest


def depends(g: Multigraph, e: int, f: int) -> bool:
    """True iff every perfect matching containing e also contains f."""
    if e == f:
        raise GraphError("dependence needs two distinct edges")
    g.ends(f)
    if not is_admissible(g, e):
        raise GraphError(f"edge {e} is not admissible")
    u, v = g.ends(e)
    return not is_matchable_without(g.delete_edges(f), (u, v))


def mutually_dependent(g: Multigraph, e: int, f: int) -> bool:
    return depends(g, e, f) and depends(g, f, e)


def bipartite_inadmissibility_witness(h: Multigraph, e: int, a: int | None = None):
    """Hall-type certificate that edge e = ab of a bipartite graph is inadmissible.

    Returns None when e is admissible, else (A1, A2, B1, B2) with a in A2,
    b in B1, |A1| = |B1| and no edge between A1 and B2.  ``a`` picks which
    end of e is on the A side (default: the smaller id).
    """
    parts = h.bipartition()
    if parts is None:
        raise GraphError("graph is not bipartite")
    if not has_perfect_matching(h):
        raise GraphError("graph is not matchable")
    x, y = h.ends(e)
    if a is None:
        a = min(x, y)
    b = y if a == x else x
    if a not in (x, y):
        raise GraphError("a is not an end of e")
    side_a = parts[0] if a in parts[0] else parts[1]
    side_b = h.vertices - side_a
    if is_matchable_without(h, (a, b)):
        return None
    hp = h.delete_vertices((a, b))
    m = max_matching(hp)
    mate: dict[int, int] = {}
    for f in m:
        p, q = hp.ends(f)
        mate[p], mate[q] = q, p
    root = min(v for v in side_a if v != a and v not in mate)
    a1, b1 = {root}, set()
    queue = deque([root])
    while queue:
        p = queue.popleft()
        for q in hp.neighbors(p):
            if q not in b1:
                b1.add(q)
                r = mate.get(q)
                if r is not None and r not in a1:
                    a1.add(r)
                    queue.append(r)
    b1.add(b)
    A1, B1 = frozenset(a1), frozenset(b1)
    A2, B2 = side_a - A1, side_b - B1
    assert a in A2 and b in B1
    assert len(A1) == len(B1)
    assert not any((p in A1 and q in B2) or (q in A1 and p in B2) for p, q in h.edges.values())
    return A1, A2, B1, B2


# ---------------------------------------------------------------------------
# exhaustive oracles


def enumerate_perfect_matchings(g: Multigraph) -> Iterator[frozenset[int]]:
    """Every perfect matching (parallel edges give distinct matchings)."""
    inc = {v: g.incident(v) for v in g.vertices}

    def rec(free: frozenset[int], chosen: tuple[int, ...]):
        if not free:
            yield frozenset(chosen)
            return
        v = min(free)
        for e in inc[v]:
            w = g.other_end(e, v)
            if w in free:
                yield from rec(free - {v, w}, chosen + (e,))

    if g.n % 2 == 0:
        yield from rec(g.vertices, ())


def brute_force_matching_number(g: Multigraph) -> int:
    nbrs = {v: frozenset(g.neighbors(v)) for v in g.vertices}

    @lru_cache(maxsize=None)
    def best(free: frozenset[int]) -> int:
        if len(free) < 2:
            return 0
        v = min(free)
        rest = free - {v}
        out = best(rest)
        for w in nbrs[v] & rest:
            out = max(out, 1 + best(rest - {w}))
        return out

    return best(g.vertices)


def is_matching(g: Multigraph, edges: Iterable[int]) -> bool:
    seen: set[int] = set()
    for e in edges:
        u, v = g.ends(e)
        if u in seen or v in seen:
            return False
        seen.update((u, v))
    return True
