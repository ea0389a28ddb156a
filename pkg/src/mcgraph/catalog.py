"""Named graphs used throughout the tests and reports.

Each entry records the adjacency under readable vertex names, optional
marked vertices/edges, and a list of facts the rest of the package is
expected to confirm.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graph import GraphError, Multigraph


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    graph: Multigraph
    provenance: str
    names: dict[str, int]
    known_facts: dict[str, object]
    marks: dict[str, object] = field(default_factory=dict)

    def vertex(self, name: str) -> int:
        return self.names[name]

    def edge(self, a: str, b: str) -> int:
        ids = self.graph.edges_between(self.names[a], self.names[b])
        if len(ids) != 1:
            raise GraphError(f"no unique edge {a}-{b} in {self.name}")
        return ids[0]


def _build(pairs: list[tuple[str, str]]) -> tuple[Multigraph, dict[str, int]]:
    names: dict[str, int] = {}
    for a, b in pairs:
        for x in (a, b):
            names.setdefault(x, len(names))
    g = Multigraph.from_edges(len(names), [(names[a], names[b]) for a, b in pairs])
    return g, names


def _chain(spec: str) -> list[tuple[str, str]]:
    """Parse 'a-b b-c ...' into name pairs."""
    return [tuple(tok.split("-")) for tok in spec.split()]  # type: ignore[misc]


_K4 = _chain("a-b a-c a-d b-c b-d c-d")
_PRISM = _chain("a1-b1 b1-c1 c1-a1 a2-b2 b2-c2 c2-a2 a1-a2 b1-b2 c1-c2")
_K33 = [(a, b) for a in ("a1", "a2", "a3") for b in ("b1", "b2", "b3")]
_PETERSEN = _chain(
    "o0-o1 o1-o2 o2-o3 o3-o4 o4-o0 o0-i0 o1-i1 o2-i2 o3-i3 o4-i4 "
    "i0-i2 i2-i4 i4-i1 i1-i3 i3-i0"
)
_TRICORN = _chain(
    "c-h90 c-h210 c-h330 "
    "h90-o70 h90-o110 h210-o190 h210-o230 h330-o310 h330-o350 "
    "o70-o110 o110-o190 o190-o230 o230-o310 o310-o350 o350-o70"
)
_FIG1 = _chain("a-b b-c c-a a-p b-q c-r s-p s-q s-r t-p t-q t-r")
_FIG3 = _chain("A-B A-T B-T A-Bot B-Bot C-D C-T C-Bot D-T D-Bot")
_FIG4 = _chain(
    "v-u1 v-u2 v-u3 u1-b u1-c u2-P u2-R u3-Q u3-S "
    "P-a P-Q Q-b R-d R-S S-c a-y1 a-y2 b-y1 c-y2 d-y1 d-y2"
)
_FIG5_COMMON = _chain(
    "O-O' O-a a-b b-c c-d d-O a-q d-p p-b q-c "
    "O'-a' a'-b' b'-c' c'-d' d'-O' a'-s d'-r r-s T-p T-r W-q W-s"
)
_CUBEPLEX = _chain(
    "v-u1 v-u2 v-u3 u1-s1 u1-t1 u2-s2 u2-t2 u3-t3 u3-s3 "
    "s2-t3 t2-s3 t3-s1 s2-y t1-s3 y-t2 y'-s1 y'-y y'-t1"
)
# the Petersen graph drawn in the same frame as the Cubeplex
PETERSEN_FRAME = _chain(
    "v-u1 v-u2 v-u3 u1-s1 u1-t1 u2-s2 u2-t2 u3-t3 u3-s3 "
    "s2-t3 t2-s3 t3-s1 s2-t1 t1-s3 s1-t2"
)


def _entries() -> dict[str, CatalogEntry]:
    out: dict[str, CatalogEntry] = {}

    def add(name, pairs, provenance, facts, marks=None):
        g, names = _build(pairs)
        out[name] = CatalogEntry(name, g, provenance, names, facts, marks or {})

    add("k4", _K4, "complete graph on four vertices", {
        "cubic": True, "brick": True, "efec": True, "removable_edges": 0,
        "removable_doubletons": 3, "near_bipartite": True, "b": 1,
    })
    add("c6bar", _PRISM, "triangular prism (complement of the 6-cycle)", {
        "cubic": True, "brick": True, "efec": False, "removable_edges": 0,
        "removable_doubletons": 3, "near_bipartite": True, "three_edge_colorable": True,
        "nontrivial_3_cuts": 1,
    })
    add("k33", _K33, "complete bipartite graph K3,3", {
        "cubic": True, "brace": True, "brick": False, "b": 0,
    })
    add("petersen", _PETERSEN, "the Petersen graph", {
        "cubic": True, "brick": True, "efec": True, "snark": True,
        "near_bipartite": False, "removable_edges": 15, "quasi_b_invariant_edges": 15,
        "b_invariant_edges": 0, "vertex_connectivity": 3, "edge_connectivity": 3,
    })
    add("tricorn", _TRICORN, "the Tricorn: center, three hubs, outer hexagon", {
        "cubic": True, "brick": True, "efec": False, "removable_edges": 3,
        "removable_b_values": [1, 1, 1],
    }, {"removable": [("o70", "o110"), ("o190", "o230"), ("o310", "o350")]})
    add("fig1", _FIG1, "cubic graph with a nontrivial barrier cut (triangle side)", {
        "cubic": True, "matching_covered": True, "brick": False, "b": 1,
        "leaves": ["k4", "k33"],
    }, {"barrier": ["p", "q", "r"], "shore": ["a", "b", "c"]})
    add("fig3", _FIG3, "bicritical graph that is not a brick", {
        "matching_covered": True, "bicritical": True, "brick": False, "b": 2,
        "leaves": ["k4", "k4"],
    }, {"separation": ["T", "Bot"]})
    add("fig4", _FIG4, "efec cubic brick with two quasi-b-invariant edges at v", {
        "cubic": True, "brick": True, "efec": True,
        "edge_classes": {"v-u1": "quasi-b-invariant", "v-u2": "quasi-b-invariant",
                         "v-u3": "b-invariant"},
        "outcome_at_v": "iii",
    }, {"v": "v"})
    add("fig5-left", _FIG5_COMMON + _chain("T-c' W-b'"),
        "cubic brick whose marked edge leaves three bricks on deletion (left variant)", {
            "cubic": True, "brick": True, "efec": False, "marked_removable": True,
            "marked_b": 3, "marked_leaves": ["k4", "k4", "k4"],
        }, {"e": ("O", "O'")})
    add("fig5-right", _FIG5_COMMON + _chain("T-b' W-c'"),
        "cubic brick whose marked edge leaves three bricks on deletion (right variant)", {
            "cubic": True, "brick": True, "efec": False, "marked_removable": True,
            "marked_b": 3, "marked_leaves": ["k4", "k4", "k4"],
        }, {"e": ("O", "O'")})
    add("cubeplex", _CUBEPLEX, "the Cubeplex", {
        "cubic": True, "brick": True, "efec": True, "near_bipartite": True,
        "outcome_at_v": "i",
    }, {"v": "v"})
    return out


_CATALOG = _entries()
NAMES = tuple(_CATALOG)


def catalog(name: str) -> CatalogEntry:
    try:
        return _CATALOG[name]
    except KeyError:
        raise GraphError(f"unknown catalog graph {name!r}; known: {', '.join(NAMES)}") from None


def petersen_frame() -> tuple[Multigraph, dict[str, int]]:
    return _build(PETERSEN_FRAME)
