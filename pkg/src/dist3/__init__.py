"""k-distance graphs and structural decisions on connectivity of D_3(G)."""

from .classifier import Certificate, Verdict, classify, verify_certificate
from .distance import d3_connected, distance_graph, k_distance, power_graph
from .graph import Graph, GraphError, all_pairs_distances, bfs, components, from_edge_list, is_connected
from .oracle import cross_check, minimize_counterexample, oracle_d3_connected
from .structure import Shape, detect_shape, inner_nodes

__all__ = [
    "Certificate", "Graph", "GraphError", "Shape", "Verdict",
    "all_pairs_distances", "bfs", "classify", "components", "cross_check",
    "d3_connected", "detect_shape", "distance_graph", "from_edge_list",
    "inner_nodes", "is_connected", "k_distance", "minimize_counterexample",
    "oracle_d3_connected", "power_graph", "verify_certificate",
]
__version__ = "0.1.0"
