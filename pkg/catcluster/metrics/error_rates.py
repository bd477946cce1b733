import logging
from dataclasses import asdict, dataclass
from typing import Dict, List, Optional, Sequence

import numpy as np

from catcluster.clusters.builder import build_ballistic, cluster_fidelity
from catcluster.clusters.graphs import GraphSpec
from catcluster.exceptions import NoCrossingError
from catcluster.metrics.fidelity import er_from_fidelity
from catcluster.metrics.visibility import OperatorPattern, er_from_visibility, ideal_visibility, visibility

QUANTITIES = ("fidelity", "visibility")


@dataclass(frozen=True)
class ErPoint:
    alpha: float
    value: float
    er: float
    graph: Optional[str] = None
    quantity: str = "fidelity"
    reference: Optional[float] = None

    def to_dict(self) -> Dict:
        return asdict(self)


def ballistic_er(graph: GraphSpec, alpha: float) -> float:
    """ER of the ballistic cluster from its fidelity with the ideal one."""
    return float(er_from_fidelity(graph, cluster_fidelity(graph, alpha)))


def er_point(
    graph: GraphSpec,
    alpha: float,
    quantity: str = "fidelity",
    pattern: Optional[OperatorPattern] = None,
    relative: bool = False,
) -> ErPoint:
    """One row of an ER curve: the ballistic fidelity or stabilizer visibility at ``alpha`` and its ER."""
    if quantity == "fidelity":
        value = cluster_fidelity(graph, alpha)
        return ErPoint(alpha, value, float(er_from_fidelity(graph, value)), graph.name, quantity)
    if quantity != "visibility":
        raise ValueError(f"Unknown quantity '{quantity}', expected one of {QUANTITIES}")
    if pattern is None:
        raise ValueError("A visibility curve needs an operator pattern")
    value = visibility(build_ballistic(graph, alpha), pattern, alpha, graph)
    reference = ideal_visibility(graph, pattern, alpha)
    er = er_from_visibility(pattern, value, reference if relative else None) if value > 0 else 0.75
    return ErPoint(alpha, value, float(er), graph.name, quantity, reference)


def er_sweep(
    graph: GraphSpec,
    alphas: Sequence[float],
    quantity: str = "fidelity",
    pattern: Optional[OperatorPattern] = None,
    relative: bool = False,
) -> List[ErPoint]:
    logging.debug(f"er_sweep: {graph.name} {quantity} over {len(alphas)} amplitudes")
    return [er_point(graph, float(alpha), quantity, pattern, relative) for alpha in alphas]


def crossing_alpha(points: Sequence[ErPoint], target: float = 0.01) -> float:
    """First amplitude at which the ER curve drops to ``target``, linearly interpolated between grid points.

    :raises NoCrossingError: when the curve never reaches ``target``
    """
    ordered = sorted(points, key=lambda point: point.alpha)
    if ordered and ordered[0].er <= target:
        return ordered[0].alpha
    for left, right in zip(ordered, ordered[1:]):
        if left.er > target >= right.er:
            weight = (left.er - target) / (left.er - right.er)
            return float(left.alpha + weight * (right.alpha - left.alpha))
    raise NoCrossingError(
        f"ER never reaches {target} over alpha in [{ordered[0].alpha if ordered else np.nan}, "
        f"{ordered[-1].alpha if ordered else np.nan}]"
    )
