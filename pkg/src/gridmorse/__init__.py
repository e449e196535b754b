"""Matching and independence complexes of grid-like graphs: graph families,
matching-tree Morse matchings, critical-cell censuses, and exact integral
homology for desk-scale verification."""

from .census import (CensusTable, DimensionBounds, census_extend, census_seed,
                     census_table, dimension_bounds, euler_closed_form,
                     euler_from_table, euler_recursion, low_homology_prediction,
                     observation_scan, riordan_T, riordan_identity_check)
from .comb import (CriticalCensus, StrategyScript, census_from_tree,
                   census_split, comb_census, comb_strategy, comb_tree,
                   path_strategy, path_tree, star_strategy, star_tree,
                   theta_strategy, theta_tree)
from .complexes import (CapacityError, SimplicialComplex, count_independent_sets,
                        f_vector, independence_complex, join, matching_complex,
                        reduced_euler)
from .graphs import (END_A, END_B, Graph, VertexLabel, build_graph,
                     delta2_isomorphism, grid_edge, line_graph, neighbors,
                     parse_label, plain, spine, tendril)
from .homology import (HomologyReport, IntegerMatrix, SNFResult,
                       boundary_matrices, morse_inequality_check,
                       reduced_homology, smith_normal_form, torsion_scan)
from .morse import (FacePairing, Free, Match, MatchingTree, MatchingTreeError,
                    SigmaNode, Split, collect_pairing, critical_cells, expand,
                    residual_vertices, run_strategy, sigma_count, verify_acyclic)

__version__ = "0.1.0"
