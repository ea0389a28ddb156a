"""Graph corpora: cubic generation, graph6 files and random samples."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .graph import GraphError, Multigraph
from .graph6 import read_graph6_file
from .iso import canonical_form
from .matching import is_matching_covered

MAX_GENERATED = 14


@dataclass(frozen=True)
class Corpus:
    source: str
    graphs: tuple[Multigraph, ...]
    dedup: str = "isomorphism-free"

    def __iter__(self) -> Iterator[Multigraph]:
        return iter(self.graphs)

    def __len__(self) -> int:
        return len(self.graphs)


# ---------------------------------------------------------------------------
# cubic generation by edge insertion


def _excess(g: Multigraph) -> int:
    """Number of edges beyond the first in every parallel class."""
    return g.m - len(set(g.edges.values()))


def _insertions(g: Multigraph) -> Iterator[Multigraph]:
    """Subdivide two edges (or one edge twice) and join the new vertices."""
    ids = sorted(g.edges)
    base = max(g.vertices) + 1
    for i, e in enumerate(ids):
        for f in ids[i:]:
            a, b = base, base + 1
            edges = [uv for k, uv in g.edges.items() if k not in (e, f)]
            eu, ev = g.edges[e]
            if e == f:
                edges += [(eu, a), (a, b), (b, ev), (a, b)]
            else:
                fu, fv = g.edges[f]
                edges += [(eu, a), (a, ev), (fu, b), (b, fv), (a, b)]
            yield Multigraph(list(g.vertices) + [a, b], edges)


def _pendant_gadgets(g: Multigraph) -> Iterator[Multigraph]:
    """Subdivide an edge and hang a triangle with one doubled side from the new vertex.

    Insertions alone cannot reach graphs whose every reduction would need a
    loop, such as two such gadgets joined by a bridge.
    """
    s, t, p, q = (max(g.vertices) + 1 + i for i in range(4))
    for e in sorted(g.edges):
        u, v = g.edges[e]
        edges = [uv for k, uv in g.edges.items() if k != e]
        edges += [(u, s), (s, v), (s, t), (t, p), (t, q), (p, q), (p, q)]
        yield Multigraph(list(g.vertices) + [s, t, p, q], edges)


@lru_cache(maxsize=None)
def _cubic_level(n: int, max_excess: int) -> tuple[Multigraph, ...]:
    """Connected loopless cubic multigraphs on n vertices with limited parallel excess.

    Children come from insertions into graphs two vertices smaller and from
    pendant gadgets on graphs four vertices smaller.  An insertion lowers the
    excess by at most two and a gadget never lowers it, which bounds what
    the parent levels must keep.  Completeness is checked against known
    counts and an independent enumerator in the tests.
    """
    if n < 2:
        return ()
    if n == 2:
        theta = Multigraph.from_edges(2, [(0, 1)] * 3)
        return (theta,) if _excess(theta) <= max_excess else ()
    children = [c for p in _cubic_level(n - 2, max_excess + 2) for c in _insertions(p)]
    if max_excess >= 1:
        children += [c for p in _cubic_level(n - 4, max_excess) for c in _pendant_gadgets(p)]
    seen: dict = {}
    for child in children:
        if _excess(child) > max_excess:
            continue
        key = canonical_form(child)
        if key not in seen:
            seen[key] = child.compact()[0]
    return tuple(seen[k] for k in sorted(seen))


def _check_n(n: int) -> None:
    if n % 2 or n < 4 or n > MAX_GENERATED:
        raise GraphError(f"cubic generation needs even n in 4..{MAX_GENERATED}, got {n}")


def generate_cubic(n: int) -> Corpus:
    """All connected simple cubic graphs on n vertices, one per isomorphism class."""
    _check_n(n)
    return Corpus(f"generated({n})", _cubic_level(n, 0))


def generate_cubic_range(ns: Iterable[int]) -> Corpus:
    graphs = []
    for n in ns:
        graphs.extend(generate_cubic(n).graphs)
    return Corpus("generated(" + ",".join(str(n) for n in ns) + ")", tuple(graphs))


def count_cubic_by_completion(n: int) -> int:
    """Independent count of connected simple cubic graphs by labeled completion.

    Vertex 0 is joined to 1, 2, 3; afterwards the lowest vertex still short
    of degree three is given its next neighbour among higher-numbered
    vertices.  Completed graphs are deduplicated by canonical form.
    """
    if n % 2 or n < 4:
        raise GraphError("need even n >= 4")
    adj = [set() for _ in range(n)]
    for v in (1, 2, 3):
        adj[0].add(v)
        adj[v].add(0)
    forms = set()

    def rec():
        v = next((x for x in range(n) if len(adj[x]) < 3), None)
        if v is None:
            g = Multigraph.from_edges(n, [(a, b) for a in range(n) for b in adj[a] if a < b])
            if g.is_connected():
                forms.add(canonical_form(g))
            return
        lo = max((w for w in adj[v] if w > v), default=v)
        for w in range(lo + 1, n):
            if len(adj[w]) < 3 and w not in adj[v]:
                adj[v].add(w)
                adj[w].add(v)
                rec()
                adj[v].discard(w)
                adj[w].discard(v)

    rec()
    return len(forms)


# ---------------------------------------------------------------------------
# small general graphs


@lru_cache(maxsize=None)
def all_graphs(n: int) -> tuple[Multigraph, ...]:
    """All simple graphs on n vertices up to isomorphism (intended for n <= 7)."""
    if n == 0:
        return (Multigraph.from_edges(0, []),)
    seen: dict = {}
    for g in all_graphs(n - 1):
        new = n - 1
        for r in range(0, n):
            for nbrs in itertools.combinations(range(n - 1), r):
                h = Multigraph(range(n), list(g.edges.values()) + [(w, new) for w in nbrs])
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = h
    return tuple(seen[k] for k in sorted(seen))


def connected_graphs_up_to(n: int, exact_through: int = 7) -> Iterator[Multigraph]:
    """Every connected simple graph on at most n vertices.

    Up to ``exact_through`` vertices each class appears once; above that a
    new vertex is attached to every connected graph one size smaller in all
    possible ways (every class appears, some several times).
    """
    for k in range(1, min(n, exact_through) + 1):
        for g in all_graphs(k):
            if g.is_connected():
                yield g
    for k in range(exact_through + 1, n + 1):
        base = [g for g in all_graphs(k - 1) if g.is_connected()]
        for g in base:
            for r in range(1, k):
                for nbrs in itertools.combinations(range(k - 1), r):
                    yield Multigraph(range(k), list(g.edges.values()) + [(w, k - 1) for w in nbrs])


# ---------------------------------------------------------------------------
# random samples


def random_graph(n: int, p: float, rng: random.Random) -> Multigraph:
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return Multigraph.from_edges(n, pairs)


def _splice(g: Multigraph, h: Multigraph, rng: random.Random) -> Multigraph | None:
    """Glue g - u and h - w along a bijection of their neighbourhoods (equal degrees)."""
    u = rng.choice(sorted(g.vertices))
    cands = [w for w in sorted(h.vertices) if h.degree(w) == g.degree(u)]
    if not cands:
        return None
    w = rng.choice(cands)
    gu = [g.other_end(e, u) for e in g.incident(u)]
    hw = [h.other_end(e, w) for e in h.incident(w)]
    rng.shuffle(hw)
    off = max(g.vertices) + 1
    edges = [uv for e, uv in g.edges.items() if u not in uv]
    edges += [(a + off, b + off) for e, (a, b) in h.edges.items() if w not in (a, b)]
    edges += [(a, b + off) for a, b in zip(gu, hw)]
    verts = [v for v in g.vertices if v != u] + [v + off for v in h.vertices if v != w]
    return Multigraph(verts, edges).compact()[0]


def random_matching_covered(rng: random.Random, max_n: int = 12, tries: int = 1000) -> Multigraph:
    """A random matching covered graph on at most ``max_n`` vertices.

    Half of the draws are sparse G(n, p) samples; the other half splice two
    smaller matching covered graphs, which plants a nontrivial tight cut.
    """
    for _ in range(tries):
        if rng.random() < 0.5 or max_n < 8:
            n = rng.choice(range(4, max_n + 1, 2))
            g = random_graph(n, rng.uniform(2.5 / n, 0.7), rng)
        else:
            n1 = rng.choice(range(4, max_n - 2, 2))
            n2 = max_n + 2 - n1 if rng.random() < 0.5 else rng.choice(range(4, max_n + 3 - n1, 2))
            a = random_matching_covered(rng, n1, tries)
            b = random_matching_covered(rng, n2, tries)
            g = _splice(a, b, rng)
            if g is None or g.n > max_n:
                continue
        if is_matching_covered(g):
            return g
    raise RuntimeError("could not draw a matching covered graph")


def read_corpus(path) -> Corpus:
    return Corpus(f"graph6-file({path})", tuple(read_graph6_file(path)), dedup="raw")
