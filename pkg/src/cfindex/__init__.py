"""Conflict-free edge coloring of trees: exact oracles, a linear-time
two-color decider, a matching-based decider and a constructive builder for
trees with long degree-2 paths."""

from .coloring import BLUE, RED, EdgeColoring, Matching, verify_conflict_free
from .decision import DecisionResult, Evidence
from .deg2_builder import build_coloring, hypotheses_hold
from .linear_solver import decide
from .matching_dp import decide_via_matching, find_dim, is_dominating_induced
from .oracle import brute_force_index, enumerate_trees
from .tree_core import RootedTree, Tree, parse_tree, read_tree, root_at_leaf

__version__ = "0.1.0"

__all__ = [
    "BLUE", "RED", "DecisionResult", "EdgeColoring", "Evidence", "Matching", "RootedTree", "Tree",
    "brute_force_index", "build_coloring", "decide", "decide_via_matching", "enumerate_trees",
    "find_dim", "hypotheses_hold", "is_dominating_induced", "parse_tree", "read_tree",
    "root_at_leaf", "verify_conflict_free",
]
