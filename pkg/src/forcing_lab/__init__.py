"""forcing-lab: exact k-forcing numbers of graphs.

A colored vertex with at most k non-colored neighbors colors all of its
non-colored neighbors; a set whose closure under that rule covers the
graph is a k-forcing set. This package computes minimum k-forcing sets
exactly, evaluates the sharp degree upper bounds in exact rational
arithmetic, and verifies exhaustively over all small connected graphs
that bound equality at k = 1 happens precisely on cycles, complete
graphs, and balanced complete bipartite graphs.
"""

__version__ = "0.1.0"

from ._kernels import HAVE_COMPILED, active_backend
from .bounds import (BoundReport, ExtremalClass, attains_equality,
                     build_bound_report, classify_extremal,
                     degree_refined_bound, forcing_upper_bound)
from .engine import (ForcingTrace, TraceError, closure, is_forcing_set,
                     replay, stalled_frontier, trace)
from .enumeration import (enumerate_all, enumerate_connected, labeled_trees,
                          random_trees)
from .graph6 import Graph6Error, encode_graph6, parse_graph6
from .graphs import (Graph, VertexSet, complete, complete_bipartite, cycle,
                     degree_stats, edge_boundary, generate, is_connected,
                     is_k_connected, parse_edge_list, format_edge_list, path,
                     star, tree_from_pruefer)
from .solver import (DEFAULT_NODE_BUDGET, BudgetExceeded, SolveResult,
                     brute_force_oracle, greedy_upper_bound, solve,
                     solve_connected_complement)
from .verifier import (StructureCheck, VerificationRecord, VerifyRun,
                       check_extremal_structure, connected_k_dominating_suite,
                       run_known_values, run_tree_leaf_suite, verify_graphs,
                       verify_stream)

__all__ = [
    "__version__", "HAVE_COMPILED", "active_backend",
    "Graph", "VertexSet", "Graph6Error", "parse_graph6", "encode_graph6",
    "parse_edge_list", "format_edge_list",
    "cycle", "complete", "complete_bipartite", "path", "star",
    "tree_from_pruefer", "generate", "degree_stats", "is_connected",
    "is_k_connected", "edge_boundary",
    "enumerate_connected", "enumerate_all", "labeled_trees", "random_trees",
    "closure", "is_forcing_set", "trace", "replay", "stalled_frontier",
    "ForcingTrace", "TraceError",
    "SolveResult", "BudgetExceeded", "DEFAULT_NODE_BUDGET",
    "brute_force_oracle", "solve", "greedy_upper_bound",
    "solve_connected_complement",
    "forcing_upper_bound", "degree_refined_bound", "attains_equality",
    "BoundReport", "build_bound_report", "ExtremalClass", "classify_extremal",
    "VerificationRecord", "VerifyRun", "verify_stream", "verify_graphs",
    "StructureCheck", "check_extremal_structure", "run_tree_leaf_suite",
    "run_known_values", "connected_k_dominating_suite",
]
