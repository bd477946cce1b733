from .builder import (
    build_ballistic,
    build_ideal,
    cluster_fidelity,
    edge_order_deviation,
    graph_contraction,
    ideal_norm2,
    ideal_signs,
    overlap_factor,
)
from .graphs import GraphSpec, graph_from_dict, load_graph, load_preset_data, save_graph
