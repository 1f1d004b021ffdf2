"""Watchman's walks, domination variants, and tournament census tooling."""

__version__ = "0.1.0"

from .core import (Condensation, Digraph, Tournament, cycle_through_vertex,
                   dominating_strong_component, hamilton_cycle, hamilton_path,
                   is_dominating_set, is_strongly_connected, parse_edge_list,
                   parse_graph, strong_components)
from .domination import (DominationReport, all_minimum_dominating_sets,
                         connected_domination_numbers, cycle_domination_number,
                         domination_number, domination_report,
                         total_domination_number)
from .families import (PartitionSpec, ScoreSequence, add_sink, add_source,
                       bipartite_walk_construction, circulant, fixtures,
                       is_simple, local_transitivity, paley, random_orientation,
                       random_tournament, score_sequence, strongify, transitive)
from .watchman import (Walk, WalkReport, has_watchman_walk,
                       shortest_closed_walk_through, source_criterion,
                       watchman_number, watchman_number_tournament)
from .census import (CanonicalCode, CensusTable, canonical_form, census,
                     enumerate_tournaments, verify_appendix_a)
from .properties import SUITES, SuiteResult, run_suite
