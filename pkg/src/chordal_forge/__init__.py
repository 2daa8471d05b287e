"""Chordal subgraph bounds, extremal constructions, certified extraction
algorithms and desk-scale exact oracles."""

from .bounds import g1, g2, g2_witness, g3, general_target, turan_number
from .chordality import (ChordalBuilder, ChordalSubgraph, ChordalityWitness,
                         is_chordal, star_union, verify_peo)
from .constructions import (general_fig1, k1_isolated, k2_bipartite,
                            turan_graph, turan_plus_edge)
from .extract_exact import dirac_diamond, extract_k1, extract_k2, extract_k3
from .extract_general import (GeneralParams, clique_process, extract_general,
                              forest_select)
from .graph_core import Graph, common_neighborhood, find_clique
from .oracle import f_exact, max_chordal_subgraph
from .report import ExtractionReport

__all__ = [
    "Graph", "common_neighborhood", "find_clique",
    "is_chordal", "verify_peo", "star_union",
    "ChordalBuilder", "ChordalSubgraph", "ChordalityWitness",
    "turan_number", "g1", "g2", "g2_witness", "g3", "general_target",
    "turan_graph", "turan_plus_edge", "k1_isolated", "k2_bipartite",
    "general_fig1",
    "extract_k1", "extract_k2", "extract_k3", "dirac_diamond",
    "extract_general", "clique_process", "forest_select", "GeneralParams",
    "f_exact", "max_chordal_subgraph",
    "ExtractionReport",
]
