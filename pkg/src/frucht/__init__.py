"""Graphs with prescribed automorphism groups.

Given any finite group, this package constructs a simple undirected graph
whose automorphism group is exactly that group, going through a colored
directed Cayley graph and replacing arcs and colors by rigid gadgets.  A
built-in individualization-refinement engine computes automorphism groups
and isomorphisms, so every construction ships with a verification report.
"""

from frucht.graphs import (
    ColoredDigraph,
    Digraph,
    Graph,
    GraphError,
    PointedGraph,
    VertexMap,
    add_pendant_path,
    attach_pointed,
    disjoint_union,
    is_connected,
    underlying_graph,
)
from frucht.graph_io import (
    FormatError,
    graph6_decode,
    graph6_encode,
    parse_colored_digraph,
    parse_digraph,
    serialize_colored_digraph,
    serialize_digraph,
)
from frucht.groups import (
    FiniteGroup,
    GeneratingSet,
    GroupError,
    GroupMap,
    IdentityInGeneratingSet,
    are_isomorphic_groups,
    conjugating_element,
    generating_set,
    group_automorphisms,
    is_generating_set,
    is_inner,
    permutation_group_order,
)
from frucht.catalog import CatalogEntry, catalog
from frucht.aut import AutGroup, Coloring, are_isomorphic, automorphism_group, is_rigid, refine
from frucht.cayley import (
    CayleyResult,
    colored_cayley,
    drr_search,
    orbit_count,
    plain_cayley,
    verify_regular_embedding,
)
from frucht.gadgets import (
    DirectionEncoding,
    FruchtResult,
    GadgetLayout,
    default_color_labels,
    encode_colored_digraph,
    encode_directions,
    extend_automorphism,
    frucht_graph,
)
from frucht.rcpg import HFSet, RCPGFamily, hf_format, hf_parse, hf_sets_up_to_rank, rcpg_for_hf, sabidussi_extend
from frucht.orders import gamma_graph, order_to_digraph
from frucht.rg import ExtensionResult, ProbeReport, extension_property, neighborhood, neighborhood_report, sample_graph

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
