import logging
from dataclasses import dataclass
from typing import List, Optional, Union

import numpy as np

from catcluster.clusters.builder import graph_contraction, overlap_factor
from catcluster.clusters.graphs import GraphSpec
from catcluster.exceptions import ErInversionRangeError, InvalidOperatorPattern
from catcluster.measurements.projectors import gaussian_band_integral, parity_sums
from catcluster.states.coherent import SuperposedState, _check_amplitude, log_gram, norm2

_LABELS = frozenset("IXZ")


@dataclass(frozen=True)
class OperatorPattern:
    """One label in ``{I, X, Z}`` per vertex. X is read out by displaced photon counting, Z by homodyne."""

    labels: str

    def __post_init__(self):
        labels = str(self.labels).upper()
        if not labels or set(labels) - _LABELS:
            raise InvalidOperatorPattern(f"Pattern '{self.labels}' must be made of the letters I, X and Z")
        if set(labels) == {"I"}:
            raise InvalidOperatorPattern(f"Pattern '{self.labels}' has no measured qubit")
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return len(self.labels)

    def __str__(self) -> str:
        return self.labels

    @property
    def weight(self) -> int:
        return sum(1 for label in self.labels if label != "I")

    @property
    def x_vertices(self) -> List[int]:
        return [v for v, label in enumerate(self.labels) if label == "X"]

    @property
    def z_vertices(self) -> List[int]:
        return [v for v, label in enumerate(self.labels) if label == "Z"]

    @classmethod
    def local_stabilizer(cls, graph: GraphSpec, vertex: int) -> "OperatorPattern":
        """``X`` on ``vertex`` and ``Z`` on each of its neighbours."""
        labels = ["I"] * graph.vertex_count
        labels[vertex] = "X"
        for neighbour in graph.neighbors(vertex):
            labels[neighbour] = "Z"
        return cls("".join(labels))

    @classmethod
    def for_graph(cls, text: str, graph: GraphSpec) -> "OperatorPattern":
        """Read ``text`` as a full per-vertex pattern, or as shorthand for the graph center's local stabilizer.

        Shorthand such as ``ZZXZZ`` must hold exactly one X and as many Z as the center has neighbours.
        """
        text = str(text).upper()
        if len(text) == graph.vertex_count:
            return cls(text)
        if graph.center is None:
            raise InvalidOperatorPattern(
                f"Pattern '{text}' has {len(text)} labels for a {graph.vertex_count}-vertex graph without a center"
            )
        degree = len(graph.neighbors(graph.center))
        if text.count("X") != 1 or text.count("Z") != degree or len(text) != degree + 1:
            raise InvalidOperatorPattern(
                f"Pattern '{text}' is neither a full pattern for {graph.vertex_count} vertices nor the local "
                f"stabilizer of center {graph.center} (one X, {degree} Z)"
            )
        return cls.local_stabilizer(graph, graph.center)


def stabilizer_sign(graph: GraphSpec, pattern: OperatorPattern) -> int:
    """Eigenvalue of the ideal qubit cluster under ``pattern``.

    With ``S`` the X-labelled vertices, the pattern is ``(-1)^e(S)`` times the product of the generators ``K_v``,
    ``v`` in ``S``, where ``e(S)`` counts edges inside ``S``; this requires the Z labels to be exactly the vertices
    outside ``S`` with an odd number of neighbours in ``S`` and every vertex of ``S`` to have an even number.

    :raises InvalidOperatorPattern: when the pattern is not (up to sign) a stabilizer of the graph
    """
    if len(pattern) != graph.vertex_count:
        raise InvalidOperatorPattern(f"Pattern '{pattern}' has {len(pattern)} labels for {graph.vertex_count} vertices")
    members = np.zeros(graph.vertex_count, dtype=np.int64)
    members[pattern.x_vertices] = 1
    counts = graph.adjacency().astype(np.int64) @ members
    expected_z = (counts % 2 == 1) & (members == 0)
    actual_z = np.zeros(graph.vertex_count, dtype=bool)
    actual_z[pattern.z_vertices] = True
    if members.sum() == 0 or np.any(expected_z != actual_z) or np.any(counts[members == 1] % 2 == 1):
        raise InvalidOperatorPattern(f"Pattern '{pattern}' is not an element of the stabilizer group of the graph")
    inside_edges = sum(1 for u, v in graph.edges if members[u] and members[v])
    return -1 if inside_edges % 2 else 1


def x_difference(beta_j: np.ndarray, beta_k: np.ndarray, alpha: float) -> np.ndarray:
    """``<beta_j| (P_even - P_odd) |beta_k>`` after displacing by ``-alpha/2``, as Fock class sums."""
    even, odd = parity_sums(beta_j, beta_k, d=-alpha / 2.0)
    return even - odd


def z_difference(beta_j: np.ndarray, beta_k: np.ndarray, alpha: float) -> np.ndarray:
    """``<beta_j| (P_(x < alpha) - P_(x > alpha)) |beta_k>`` from the homodyne band integrals."""
    bj = np.asarray(beta_j)[:, None]
    bk = np.asarray(beta_k)[None, :]
    return gaussian_band_integral(bk, bj, -np.inf, alpha) - gaussian_band_integral(bk, bj, alpha, np.inf)


def _mode_factor(label: str, beta_j: np.ndarray, beta_k: np.ndarray, alpha: float) -> np.ndarray:
    if label == "X":
        return x_difference(beta_j, beta_k, alpha)
    if label == "Z":
        return z_difference(beta_j, beta_k, alpha)
    return np.exp(log_gram(beta_j[:, None], beta_k[:, None]))


def correlation(state: SuperposedState, pattern: OperatorPattern, alpha: float) -> float:
    """``P_plus - P_minus``: the expectation of the product of the binned ``+-1`` outcomes.

    Each mode contributes a term-pair factor evaluated on its distinct amplitudes only; the factors multiply
    elementwise and are summed against ``conj(c_j) c_k`` in a fixed order.
    """
    _check_amplitude(alpha)
    if len(pattern) != state.modes:
        raise InvalidOperatorPattern(f"Pattern '{pattern}' has {len(pattern)} labels for a {state.modes}-mode state")
    pair = np.ones((len(state), len(state)), dtype=np.complex128)
    for mode, label in enumerate(pattern.labels):
        values, index = np.unique(state.alphas[:, mode], return_inverse=True)
        factor = _mode_factor(label, values, values, alpha)
        pair *= factor[np.ix_(index.ravel(), index.ravel())]
    return float(np.real(np.conj(state.coeffs) @ pair @ state.coeffs))


def visibility(
    state: SuperposedState,
    pattern: OperatorPattern,
    alpha: float,
    graph: Optional[GraphSpec] = None,
) -> float:
    """Visibility ``(P_max - P_min) / (P_max + P_min)`` of a stabilizer measurement on ``state``.

    With ``graph`` the correlated class is fixed by the ideal cluster's eigenvalue under ``pattern``, so a state
    correlated the wrong way reads as 0; without it the larger class is taken as ``P_max``.
    """
    sign = stabilizer_sign(graph, pattern) if graph is not None else None
    corr = correlation(state, pattern, alpha)
    total = norm2(state)
    value = sign * corr / total if sign is not None else abs(corr) / total
    logging.debug(f"visibility: pattern={pattern} alpha={alpha} value={value:.12g}")
    return float(np.clip(value, 0.0, 1.0))


def ideal_visibility(graph: GraphSpec, pattern: OperatorPattern, alpha: float) -> float:
    """Visibility of the ideal cluster at amplitude ``alpha``, by tensor contraction over the doubled graph."""
    _check_amplitude(alpha)
    sign = stabilizer_sign(graph, pattern)
    levels = np.array([0.0, alpha], dtype=np.complex128)
    factors = [_mode_factor(label, levels, levels, alpha) for label in pattern.labels]
    numerator = graph_contraction(graph, factors).real
    denominator = graph_contraction(graph, [overlap_factor(alpha)] * graph.vertex_count).real
    return float(np.clip(sign * numerator / denominator, 0.0, 1.0))


def er_from_visibility(
    pattern: OperatorPattern, value: Union[float, np.ndarray], reference: Optional[float] = None
) -> Union[float, np.ndarray]:
    """Depolarizing probability that attenuates a weight-``w`` stabilizer to ``value``: ``3/4 (1 - V^(1/w))``.

    With ``reference`` (the ideal visibility at the same amplitude) the ratio ``V / reference`` is inverted; a
    ratio above 1 reads as no error.

    :raises ErInversionRangeError: when ``value`` is not positive
    """
    values = np.asarray(value, dtype=np.float64)
    if np.any(values <= 0) or np.any(values > 1.0 + 1e-12):
        raise ErInversionRangeError(f"Visibility {value} outside (0, 1]")
    if reference is not None:
        if reference <= 0:
            raise ErInversionRangeError(f"Reference visibility must be positive, got {reference}")
        values = values / reference
    values = np.minimum(values, 1.0)
    result = 0.75 * (1.0 - values ** (1.0 / pattern.weight))
    return float(result) if result.ndim == 0 else result
