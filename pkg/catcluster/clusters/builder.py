import logging
from typing import List, Optional, Sequence, Union

import numpy as np

from catcluster.clusters.graphs import GraphSpec
from catcluster.states.coherent import (
    BeamSplitterParams,
    SuperposedState,
    _check_amplitude,
    apply_beam_splitter,
    bitstrings,
    cat_state,
    inner,
    norm2,
)

# Signs of the ideal CSIGN on a pair of qubits: -1 only when both are |alpha>.
_EDGE_SIGNS = np.array([[1.0, 1.0], [1.0, -1.0]])


def ideal_signs(graph: GraphSpec) -> np.ndarray:
    """``(-1)^(number of edges with both endpoints in |alpha>)`` for every bitstring, mode 0 most significant."""
    bits = bitstrings(graph.vertex_count).astype(np.int64)
    parity = np.zeros(bits.shape[0], dtype=np.int64)
    for u, v in graph.edges:
        parity += bits[:, u] * bits[:, v]
    return np.where(parity % 2 == 0, 1.0, -1.0)


def graph_contraction(graph: GraphSpec, site_factors: Sequence[np.ndarray]) -> complex:
    """Contract ``sum_{b, b'} s(b) s(b') prod_v K_v[b_v, b'_v]`` over all pairs of bitstrings.

    ``s`` are the ideal cluster signs and ``K_v`` one 2x2 factor per vertex, indexed ``[bra bit, ket bit]``. The sum
    is evaluated as a tensor network on the doubled graph (one edge sign tensor on the bra copy, one on the ket copy)
    so it never enumerates the ``4^n`` bitstring pairs.
    """
    n = graph.vertex_count
    if len(site_factors) != n:
        raise ValueError(f"Need one site factor per vertex ({n}), got {len(site_factors)}")
    operands: List = []
    for v, factor in enumerate(site_factors):
        factor = np.asarray(factor, dtype=np.complex128)
        if factor.shape != (2, 2):
            raise ValueError(f"Site factor for vertex {v} has shape {factor.shape}, expected (2, 2)")
        operands.extend([factor, [v, n + v]])
    for u, v in graph.edges:
        operands.extend([_EDGE_SIGNS, [u, v]])
        operands.extend([_EDGE_SIGNS, [n + u, n + v]])
    operands.append([])
    return complex(np.einsum(*operands, optimize="greedy"))


def overlap_factor(alpha: float) -> np.ndarray:
    """Single-qubit overlaps ``<a b|a b'>`` for ``b, b' in {0, 1}``."""
    off = np.exp(-(alpha**2) / 2.0)
    return np.array([[1.0, off], [off, 1.0]], dtype=np.complex128)


def ideal_norm2(graph: GraphSpec, alpha: float) -> float:
    """Squared norm of the unnormalized ideal cluster ``sum_b s(b) |alpha b>``."""
    return float(graph_contraction(graph, [overlap_factor(alpha)] * graph.vertex_count).real)


def build_ideal(graph: GraphSpec, alpha: float) -> SuperposedState:
    """Cluster state made with a perfect CSIGN on the non-orthogonal ``{|0>, |alpha>}`` qubits.

    Coefficients are the cluster signs; the normalization comes from the Gram sum, not ``2^(-n/2)``.
    """
    _check_amplitude(alpha)
    bits = bitstrings(graph.vertex_count)
    scale = 1.0 / np.sqrt(ideal_norm2(graph, alpha))
    logging.debug(f"build_ideal: {graph.name or 'graph'} n={graph.vertex_count} alpha={alpha}")
    return SuperposedState(ideal_signs(graph) * scale, alpha * bits.astype(np.complex128))


def build_ballistic(
    graph: GraphSpec, alpha: float, edge_order: Optional[Sequence[Sequence[int]]] = None
) -> SuperposedState:
    """Cat state on every vertex followed by one weak beam-splitter CSIGN per edge.

    Edges are applied lexicographically unless ``edge_order`` is given. The cat product is normalized and the
    splitters are unitary, so the result is normalized without a Gram sum (which would be quadratic in ``2^n``).
    """
    order = graph.edge_order(edge_order)
    params = BeamSplitterParams.csign(alpha)
    logging.debug(f"build_ballistic: {graph.name or 'graph'} n={graph.vertex_count} alpha={alpha} order={order}")
    state = cat_state(alpha, graph.vertex_count)
    for u, v in order:
        state = apply_beam_splitter(state, u, v, params)
    return state


def cluster_fidelity(graph: GraphSpec, alpha: float, edge_order: Optional[Sequence[Sequence[int]]] = None) -> float:
    """Fidelity of the ballistic cluster with the ideal one at the same amplitude."""
    ballistic = build_ballistic(graph, alpha, edge_order)
    ideal = build_ideal(graph, alpha)
    return float(abs(inner(ideal, ballistic)) ** 2 / (norm2(ballistic) * norm2(ideal)))


def edge_order_deviation(
    graph: GraphSpec, alpha: float, order: Union[Sequence[Sequence[int]], None] = None
) -> float:
    """Change in ballistic fidelity when the edges are applied in ``order`` (default: reversed) instead of
    lexicographically."""
    if order is None:
        order = list(reversed(graph.edges))
    deviation = cluster_fidelity(graph, alpha, order) - cluster_fidelity(graph, alpha)
    logging.debug(f"edge_order_deviation: {graph.name or 'graph'} alpha={alpha} deviation={deviation:.3e}")
    return deviation
