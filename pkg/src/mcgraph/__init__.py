"""Matching covered graphs: perfect matchings, tight cuts, bricks and cubic edge classes."""

from .bricks import (
    B_INVARIANT, DOUBLETON, NON_REMOVABLE, QUASI, REMOVABLE_OTHER, EdgeClassification,
    RemovableStructure, StructureError, binv_census, classify_edge, classify_edges,
    is_3_edge_colorable, is_essentially_4ec_cubic, is_inflexible, is_near_bipartite, is_removable,
    is_snark, qbinv_structure, removable_doubletons, removable_structure, two_qbinv_vertex_outcome,
)
from .catalog import CatalogEntry, catalog
from .corpus import Corpus, generate_cubic, read_corpus
from .graph import (
    Cut, GraphError, Multigraph, contract_shore, cut_of, edge_connectivity,
    enumerate_small_edge_cuts, underlying_simple, vertex_connectivity,
)
from .graph6 import Graph6Error, from_graph6, to_graph6
from .iso import canonical_form, is_isomorphic
from .matching import (
    GallaiEdmondsSplit, bipartite_inadmissibility_witness, depends, gallai_edmonds,
    has_perfect_matching, is_admissible, is_barrier, is_bicritical, is_factor_critical,
    is_matching_covered, is_special_barrier, max_matching, maximal_barrier_containing,
    mutually_dependent, v_matching,
)
from .tightcuts import (
    DecompositionTree, TightCutKind, b_count, barrier_cuts, enumerate_tight_cuts_exhaustive,
    find_nontrivial_tight_cut, is_brace, is_brick, is_near_brick, is_tight_cut,
    tight_cut_decomposition, two_separation_cuts, uncross,
)
from .verify import TheoremReport, VerifyOptions, analyze, verify_theorem

__all__ = [name for name in dir() if not name.startswith("_")]
