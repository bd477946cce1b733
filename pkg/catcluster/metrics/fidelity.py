import logging
from functools import lru_cache
from typing import Tuple, Union

import numpy as np
from scipy import optimize

from catcluster.clusters.graphs import GraphSpec
from catcluster.exceptions import CancelledStateError, ErInversionRangeError, ModeMismatchError
from catcluster.globals import DEFAULT_TOLERANCES
from catcluster.states.coherent import SuperposedState, bitstrings, inner, norm2
from catcluster.utils.catcluster_utils import create_state_obj

MAX_P = 0.75


def fidelity(a: Union[SuperposedState, dict, str], b: Union[SuperposedState, dict, str]) -> float:
    """``|<a|b>|^2 / (norm2(a) norm2(b))``; neither state has to be normalized.

    Either argument may also be a state dump, see :func:`catcluster.utils.catcluster_utils.create_state_obj`.
    """
    a, b = create_state_obj(a), create_state_obj(b)
    if a.modes != b.modes:
        raise ModeMismatchError(f"Cannot compare a {a.modes}-mode state with a {b.modes}-mode state")
    na, nb = norm2(a), norm2(b)
    if na <= DEFAULT_TOLERANCES.ZERO_NORM or nb <= DEFAULT_TOLERANCES.ZERO_NORM:
        raise CancelledStateError(f"Fidelity of a zero-norm state (norms {na:.3e}, {nb:.3e})")
    return float(abs(inner(a, b)) ** 2 / (na * nb))


@lru_cache(maxsize=64)
def _weight_enumerator(vertex_count: int, edges: Tuple[Tuple[int, int], ...]) -> Tuple[int, ...]:
    adjacency = np.zeros((vertex_count, vertex_count), dtype=np.int64)
    for u, v in edges:
        adjacency[u, v] = adjacency[v, u] = 1
    subsets = bitstrings(vertex_count).astype(np.int64)
    z_part = (subsets @ adjacency) % 2
    weights = np.count_nonzero(subsets | z_part, axis=1)
    return tuple(int(c) for c in np.bincount(weights, minlength=vertex_count + 1))


def stabilizer_weight_enumerator(graph: GraphSpec) -> np.ndarray:
    """Number of stabilizer group elements of each Pauli weight ``0..n``.

    Group element ``b`` is the product of the generators ``X_v Z_N(v)`` for ``v`` in ``b``: its X support is ``b``
    and its Z support ``b A mod 2``, so its weight is the size of their union.
    """
    return np.array(_weight_enumerator(graph.vertex_count, graph.edges), dtype=np.int64)


def depolarized_cluster_fidelity(graph: GraphSpec, p: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """Fidelity of an ideal qubit cluster after every qubit went through the depolarizing channel
    ``rho -> (1 - p) rho + p/3 (X rho X + Y rho Y + Z rho Z)``.

    Each Pauli of weight ``w`` is attenuated by ``(1 - 4p/3)^w``, giving ``2^-n sum_w A_w (1 - 4p/3)^w``.
    """
    p_arr = np.asarray(p, dtype=np.float64)
    if np.any(p_arr < 0) or np.any(p_arr > MAX_P):
        raise ErInversionRangeError(f"Depolarizing probability must lie in [0, {MAX_P}], got {p}")
    counts = stabilizer_weight_enumerator(graph)
    lam = 1.0 - 4.0 * p_arr / 3.0
    powers = lam[..., None] ** np.arange(graph.vertex_count + 1)
    value = powers @ counts / float(2**graph.vertex_count)
    return float(value) if value.ndim == 0 else value


def er_from_fidelity(graph: GraphSpec, value: Union[float, np.ndarray]) -> Union[float, np.ndarray]:
    """Depolarizing probability ``p`` whose cluster fidelity equals ``value``, by bisection on ``[0, 0.75]``.

    Values above 1 by no more than the rounding tolerance map to 0.

    :raises ErInversionRangeError: when ``value`` lies outside ``(2^-n, 1]``
    """
    floor = 2.0 ** -graph.vertex_count
    values = np.asarray(value, dtype=np.float64)
    if np.any(values <= floor) or np.any(values > 1.0 + 1e-12) or not np.all(np.isfinite(values)):
        raise ErInversionRangeError(f"Fidelity {value} outside the invertible range ({floor}, 1]")
    values = np.minimum(values, 1.0)

    if values.ndim == 0:
        if values == 1.0:
            return 0.0
        return float(
            optimize.bisect(
                lambda p: depolarized_cluster_fidelity(graph, p) - float(values),
                0.0,
                MAX_P,
                xtol=DEFAULT_TOLERANCES.BISECTION,
            )
        )

    # Vectorized bisection; F is decreasing in p.
    low = np.zeros_like(values)
    high = np.full_like(values, MAX_P)
    while np.max(high - low) > DEFAULT_TOLERANCES.BISECTION:
        mid = 0.5 * (low + high)
        above = depolarized_cluster_fidelity(graph, mid) > values
        low = np.where(above, mid, low)
        high = np.where(above, high, mid)
    result = 0.5 * (low + high)
    result[values == 1.0] = 0.0
    logging.debug(f"er_from_fidelity: inverted {values.size} values on a {graph.vertex_count}-qubit cluster")
    return result
