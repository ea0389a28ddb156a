"""Loop-free multigraphs, cuts, contractions and connectivity.

Vertex ids and edge ids are plain integers that survive deletions and
contractions, so witnesses computed on a derived graph can still be read
against the graph they came from.
"""

from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping


class GraphError(ValueError):
    """Raised when an operation's domain precondition fails."""


class Multigraph:
    """Immutable undirected multigraph without loops.

    ``edges`` maps edge id -> (u, v).  Parallel edges are distinct ids.
    """

    __slots__ = ("_vertices", "_edges", "_labels", "_inc", "_cache", "_hash")

    def __init__(
        self,
        vertices: Iterable[int],
        edges: Mapping[int, tuple[int, int]] | Iterable[tuple[int, int]],
        labels: Mapping[int, str] | None = None,
    ):
        vs = frozenset(vertices)
        if isinstance(edges, Mapping):
            items = dict(edges)
        else:
            items = dict(enumerate(edges))
        inc: dict[int, list[int]] = {v: [] for v in vs}
        clean: dict[int, tuple[int, int]] = {}
        for eid in sorted(items):
            u, v = items[eid]
            if u == v:
                raise GraphError(f"edge {eid} is a loop at {u}")
            if u not in inc or v not in inc:
                raise GraphError(f"edge {eid} has an end outside the vertex set")
            clean[eid] = (u, v) if u < v else (v, u)
            inc[u].append(eid)
            inc[v].append(eid)
        self._vertices = vs
        self._edges = clean
        self._labels = {v: s for v, s in (labels or {}).items() if v in vs}
        self._inc = {v: tuple(ids) for v, ids in inc.items()}
        self._cache: dict = {}
        self._hash = None

    @classmethod
    def from_edges(cls, n: int, pairs: Iterable[tuple[int, int]], labels=None) -> "Multigraph":
        return cls(range(n), list(pairs), labels)

    # -- basic access ---------------------------------------------------

    @property
    def vertices(self) -> frozenset[int]:
        return self._vertices

    @property
    def edges(self) -> Mapping[int, tuple[int, int]]:
        return self._edges

    @property
    def labels(self) -> Mapping[int, str]:
        return self._labels

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def ends(self, e: int) -> tuple[int, int]:
        try:
            return self._edges[e]
        except KeyError:
            raise GraphError(f"unknown edge id {e}") from None

    def other_end(self, e: int, v: int) -> int:
        a, b = self.ends(e)
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an end of edge {e}")

    def incident(self, v: int) -> tuple[int, ...]:
        return self._inc[v]

    def degree(self, v: int) -> int:
        return len(self._inc[v])

    def neighbors(self, v: int) -> list[int]:
        """Distinct neighbours of ``v`` in increasing order."""
        return sorted({self.other_end(e, v) for e in self._inc[v]})

    def edges_between(self, u: int, v: int) -> list[int]:
        return [e for e in self._inc[u] if self.other_end(e, u) == v]

    def has_edge(self, u: int, v: int) -> bool:
        return any(self.other_end(e, u) == v for e in self._inc[u])

    def sorted_vertices(self) -> list[int]:
        return sorted(self._vertices)

    def is_simple(self) -> bool:
        seen = set()
        for uv in self._edges.values():
            if uv in seen:
                return False
            seen.add(uv)
        return True

    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(ids) == 3 for ids in self._inc.values())

    def max_edge_id(self) -> int:
        return max(self._edges, default=-1)

    # -- derived graphs -------------------------------------------------

    def delete_edges(self, *ids: int) -> "Multigraph":
        for e in ids:
            self.ends(e)
        drop = set(ids)
        return Multigraph(self._vertices, {e: uv for e, uv in self._edges.items() if e not in drop}, self._labels)

    def delete_vertices(self, vs: Iterable[int]) -> "Multigraph":
        drop = set(vs)
        keep = self._vertices - drop
        edges = {e: (u, v) for e, (u, v) in self._edges.items() if u not in drop and v not in drop}
        return Multigraph(keep, edges, self._labels)

    def subgraph(self, vs: Iterable[int]) -> "Multigraph":
        """Induced subgraph on ``vs``."""
        keep = frozenset(vs)
        return self.delete_vertices(self._vertices - keep)

    def add_edge(self, u: int, v: int) -> tuple["Multigraph", int]:
        eid = self.max_edge_id() + 1
        edges = dict(self._edges)
        edges[eid] = (u, v)
        return Multigraph(self._vertices, edges, self._labels), eid

    def with_labels(self, labels: Mapping[int, str]) -> "Multigraph":
        merged = dict(self._labels)
        merged.update(labels)
        return Multigraph(self._vertices, self._edges, merged)

    def relabel(self, mapping: Mapping[int, int]) -> "Multigraph":
        """Rename vertices through ``mapping`` (must be injective)."""
        if len(set(mapping[v] for v in self._vertices)) != self.n:
            raise GraphError("relabeling is not injective")
        edges = {e: (mapping[u], mapping[v]) for e, (u, v) in self._edges.items()}
        labels = {mapping[v]: s for v, s in self._labels.items()}
        return Multigraph((mapping[v] for v in self._vertices), edges, labels)

    def compact(self) -> tuple["Multigraph", dict[int, int]]:
        """Renumber vertices to 0..n-1 and edges to 0..m-1 (order preserved)."""
        vmap = {v: i for i, v in enumerate(self.sorted_vertices())}
        edges = [(vmap[u], vmap[v]) for _, (u, v) in sorted(self._edges.items())]
        labels = {vmap[v]: s for v, s in self._labels.items()}
        return Multigraph(range(self.n), edges, labels), vmap

    # -- structure ------------------------------------------------------

    def components(self, within: Iterable[int] | None = None) -> list[frozenset[int]]:
        """Connected components, optionally of the subgraph induced by ``within``."""
        allowed = self._vertices if within is None else frozenset(within)
        seen: set[int] = set()
        comps = []
        for s in sorted(allowed):
            if s in seen:
                continue
            comp = {s}
            queue = deque([s])
            seen.add(s)
            while queue:
                x = queue.popleft()
                for e in self._inc[x]:
                    y = self.other_end(e, x)
                    if y in allowed and y not in seen:
                        seen.add(y)
                        comp.add(y)
                        queue.append(y)
            comps.append(frozenset(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n > 0 and len(self.components()) == 1

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """Colour classes of a proper 2-colouring, or None if not bipartite.

        Each component's smallest vertex goes to the first class.
        """
        colour: dict[int, int] = {}
        for s in self.sorted_vertices():
            if s in colour:
                continue
            colour[s] = 0
            queue = deque([s])
            while queue:
                x = queue.popleft()
                for e in self._inc[x]:
                    y = self.other_end(e, x)
                    if y not in colour:
                        colour[y] = 1 - colour[x]
                        queue.append(y)
                    elif colour[y] == colour[x]:
                        return None
        a = frozenset(v for v, c in colour.items() if c == 0)
        return a, self._vertices - a

    def is_bipartite(self) -> bool:
        return self.bipartition() is not None

    # -- (de)serialisation ----------------------------------------------

    def to_dict(self) -> dict:
        g, _ = self.compact()
        return {
            "n": g.n,
            "edges": [list(g.ends(e)) for e in sorted(g.edges)],
            "labels": {str(v): s for v, s in sorted(g.labels.items())},
        }

    @classmethod
    def from_dict(cls, data: Mapping) -> "Multigraph":
        try:
            n = int(data["n"])
            pairs = [(int(u), int(v)) for u, v in data["edges"]]
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphError(f"malformed multigraph JSON: {exc}") from None
        labels = {int(k): str(s) for k, s in (data.get("labels") or {}).items()}
        return cls(range(n), pairs, labels)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "Multigraph":
        return cls.from_dict(json.loads(text))

    # -- dunder ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, frozenset(self._edges.items())))
        return self._hash

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# cuts


@dataclass(frozen=True)
class Cut:
    shore: frozenset[int]
    complement: frozenset[int]
    edges: frozenset[int]

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def is_trivial(self) -> bool:
        return len(self.shore) == 1 or len(self.complement) == 1

    def smaller_shore(self) -> frozenset[int]:
        if len(self.shore) != len(self.complement):
            return min(self.shore, self.complement, key=len)
        return min(self.shore, self.complement, key=sorted)

    def flipped(self) -> "Cut":
        return Cut(self.complement, self.shore, self.edges)

    def key(self) -> frozenset[frozenset[int]]:
        """Identifies the cut regardless of which shore is named."""
        return frozenset((self.shore, self.complement))

    def to_dict(self) -> dict:
        return {"shore": sorted(self.shore), "edges": sorted(self.edges)}


def boundary(g: Multigraph, shore: Iterable[int]) -> frozenset[int]:
    s = set(shore)
    return frozenset(e for e, (u, v) in g.edges.items() if (u in s) != (v in s))


def cut_of(g: Multigraph, shore: Iterable[int]) -> Cut:
    x = frozenset(shore)
    if not x:
        raise GraphError("cut shore is empty")
    if not x <= g.vertices:
        raise GraphError("cut shore contains unknown vertices")
    if x == g.vertices:
        raise GraphError("cut shore is the whole vertex set")
    return Cut(x, g.vertices - x, boundary(g, x))


def contract_shore(g: Multigraph, shore: Iterable[int], label: str | None = None) -> Multigraph:
    """Shrink ``shore`` to one vertex.

    The new vertex reuses the smallest id in the shore; cut edges keep their
    ids and edges inside the shore disappear.
    """
    c = cut_of(g, shore)
    x = min(c.shore)
    edges = {}
    for e, (u, v) in g.edges.items():
        iu, iv = u in c.shore, v in c.shore
        if iu and iv:
            continue
        edges[e] = (x if iu else u, x if iv else v)
    labels = {v: s for v, s in g.labels.items() if v not in c.shore}
    if label is not None:
        labels[x] = label
    elif x in g.labels and len(c.shore) == 1:
        labels[x] = g.labels[x]
    return Multigraph(c.complement | {x}, edges, labels)


def cut_contractions(g: Multigraph, cut: Cut, labels: tuple[str | None, str | None] = (None, None)):
    """The two contractions of ``cut``: (shrink complement, shrink shore)."""
    return contract_shore(g, cut.complement, labels[1]), contract_shore(g, cut.shore, labels[0])


def underlying_simple(g: Multigraph) -> Multigraph:
    """Keep the smallest edge id of every parallel class."""
    keep: dict[tuple[int, int], int] = {}
    for e in sorted(g.edges):
        keep.setdefault(g.edges[e], e)
    return Multigraph(g.vertices, {e: uv for uv, e in keep.items()}, g.labels)


# ---------------------------------------------------------------------------
# connectivity


def _require_connected(g: Multigraph) -> None:
    if not g.is_connected():
        raise GraphError("graph is not connected")


def vertex_connectivity(g: Multigraph) -> int:
    """Smallest number of vertices whose removal disconnects g (n-1 if none)."""
    _require_connected(g)
    verts = g.sorted_vertices()
    simple_complete = all(g.has_edge(u, v) for u, v in itertools.combinations(verts, 2))
    if simple_complete:
        return g.n - 1
    for k in range(0, g.n - 1):
        for sep in itertools.combinations(verts, k):
            rest = g.vertices - set(sep)
            if len(g.components(rest)) > 1:
                return k
    return g.n - 1


def _max_flow_unit(g: Multigraph, s: int, t: int, limit: int | None = None) -> int:
    """Number of edge-disjoint s-t paths (each undirected edge usable once)."""
    # residual capacities on directed arcs; an undirected edge gives cap 1 each way
    cap: dict[tuple[int, int], int] = {}
    adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for u, v in g.edges.values():
        cap[(u, v)] = cap.get((u, v), 0) + 1
        cap[(v, u)] = cap.get((v, u), 0) + 1
        adj[u].add(v)
        adj[v].add(u)
    flow = 0
    while limit is None or flow < limit:
        prev = {s: s}
        queue = deque([s])
        while queue and t not in prev:
            x = queue.popleft()
            for y in adj[x]:
                if y not in prev and cap[(x, y)] > 0:
                    prev[y] = x
                    queue.append(y)
        if t not in prev:
            break
        y = t
        while y != s:
            x = prev[y]
            cap[(x, y)] -= 1
            cap[(y, x)] += 1
            y = x
        flow += 1
    return flow


def edge_connectivity(g: Multigraph) -> int:
    """Global minimum edge cut size via unit-capacity max flow."""
    _require_connected(g)
    if g.n == 1:
        return 0
    verts = g.sorted_vertices()
    s = verts[0]
    best = min(g.degree(v) for v in verts)
    for t in verts[1:]:
        best = min(best, _max_flow_unit(g, s, t, best))
    return best


def _shore_scan(g: Multigraph, k: int) -> Iterator[Cut]:
    verts = g.sorted_vertices()
    idx = {v: i for i, v in enumerate(verts)}
    pairs = [(1 << idx[u], 1 << idx[v], e) for e, (u, v) in g.edges.items()]
    n = len(verts)
    full = (1 << n) - 1
    # shores containing verts[0] represent each {X, complement} once
    for rest in range(0, 1 << (n - 1)):
        mask = 1 | (rest << 1)
        if mask == full:
            continue
        size = 0
        for bu, bv, _ in pairs:
            if bool(mask & bu) != bool(mask & bv):
                size += 1
                if size > k:
                    break
        if size <= k:
            shore = frozenset(verts[i] for i in range(n) if mask >> i & 1)
            yield Cut(shore, g.vertices - shore,
                      frozenset(e for bu, bv, e in pairs if bool(mask & bu) != bool(mask & bv)))


def _edge_subset_scan(g: Multigraph, k: int) -> Iterator[Cut]:
    root = min(g.vertices)
    seen: set[frozenset[int]] = set()
    eids = sorted(g.edges)
    for size in range(0, k + 1):
        for chosen in itertools.combinations(eids, size):
            h = g.delete_edges(*chosen)
            comps = h.components()
            if len(comps) < 2:
                continue
            target = frozenset(chosen)
            others = [c for c in comps if root not in c]
            base = next(c for c in comps if root in c)
            for r in range(0, len(others)):
                for extra in itertools.combinations(others, r):
                    shore = base.union(*extra) if extra else base
                    if shore in seen:
                        continue
                    if boundary(g, shore) == target:
                        seen.add(shore)
                        yield Cut(shore, g.vertices - shore, target)


SHORE_SCAN_LIMIT = 16


def enumerate_small_edge_cuts(g: Multigraph, k: int) -> list[Cut]:
    """All edge cuts with at most ``k`` edges.

    Each cut is reported once, named by the shore that holds the smallest
    vertex.  Up to 16 vertices every shore is scanned; beyond that, edge
    subsets of size <= k are tried instead.
    """
    _require_connected(g)
    if g.n < 2:
        return []
    if g.n <= SHORE_SCAN_LIMIT:
        cuts = list(_shore_scan(g, k))
    else:
        cuts = list(_edge_subset_scan(g, k))
    return sorted(cuts, key=lambda c: (c.size, len(c.shore), sorted(c.shore)))
