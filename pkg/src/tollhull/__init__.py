"""Toll convexity toolkit.

Computes tolled-walk intervals, toll convex hulls, toll extreme vertices,
clique-separator decompositions, minimum toll hull sets of connected
graphs in polynomial time, and streams all minimum hull sets; brute-force
oracles certify every computation at small scale.
"""

from .atoms import AtomDecomposition, atoms, block_of, extremal_atoms, is_prime
from .convexity import (
    Block,
    extreme_vertices,
    fast_concavity_test,
    interval_of_set,
    is_t_concave,
    is_t_convex,
    is_toll_extreme,
    toll_hull,
    toll_interval,
)
from .enumeration import (
    EnumerationReport,
    SelectionMenu,
    compare_with_bruteforce,
    enumerate_min_hull_sets,
    selection_menu,
)
from .graph import (
    Graph,
    GraphError,
    ParseError,
    SizeLimitError,
    fixture,
    generate,
    is_caterpillar,
    is_tree,
    parse_edge_list,
    parse_graph,
    parse_graph6,
    parse_graph6_file,
    to_edge_list,
    to_graph6,
)
from .solver import (
    CharacteristicBlock,
    ChoiceContext,
    HullResult,
    SolverInvariantError,
    characteristic_family,
    classify_type,
    extreme_vertices_via_family,
    solve,
)

__version__ = "0.1.0"

__all__ = [
    "AtomDecomposition",
    "Block",
    "CharacteristicBlock",
    "ChoiceContext",
    "EnumerationReport",
    "Graph",
    "GraphError",
    "HullResult",
    "ParseError",
    "SelectionMenu",
    "SizeLimitError",
    "SolverInvariantError",
    "atoms",
    "block_of",
    "characteristic_family",
    "classify_type",
    "compare_with_bruteforce",
    "enumerate_min_hull_sets",
    "extremal_atoms",
    "extreme_vertices",
    "extreme_vertices_via_family",
    "fast_concavity_test",
    "fixture",
    "generate",
    "interval_of_set",
    "is_caterpillar",
    "is_prime",
    "is_t_concave",
    "is_t_convex",
    "is_toll_extreme",
    "is_tree",
    "parse_edge_list",
    "parse_graph",
    "parse_graph6",
    "parse_graph6_file",
    "selection_menu",
    "solve",
    "to_edge_list",
    "to_graph6",
    "toll_hull",
    "toll_interval",
]
