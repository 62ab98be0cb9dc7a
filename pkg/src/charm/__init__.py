"""Perfect matchings of cubic graphs that meet prescribed circuits."""

from .catalog import cubic_graphs, generate_cubic_catalog
from .connectivity import EdgeCut, cyclic_edge_connectivity, find_cyclic_edge_cut, girth, is_cyclically_k_edge_connected
from .errors import *  # noqa: F401,F403
from .families import Kind, LadderFamily, classify_ladder_family, is_klee, klee_coloring, make_family
from .graph import Circuit, CubicGraph, edge, from_edges, is_perfect_matching
from .harness import VerificationReport, demo_counterexample, verify_acyclic_plus, verify_theorem
from .io import parse_graph6, write_graph6
from .solver import (
    CharmResult,
    SolveConfig,
    acyclic_complement,
    charm_matching,
    charm_matching_any,
    oracle_charm,
    second_matching,
)

__version__ = "0.1.0"
