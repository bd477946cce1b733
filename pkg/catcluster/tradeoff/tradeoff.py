import logging
from dataclasses import asdict, dataclass
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np
from pydantic import BaseModel, Field, field_validator
from scipy import optimize

from catcluster.exceptions import EmptyScanError, NoCrossingError
from catcluster.metrics.error_rates import ballistic_er
from catcluster.metrics.fidelity import er_from_fidelity
from catcluster.teleport.teleporter import (
    TWO_QUBIT_GRAPH,
    OutcomeTable,
    greedy_prefixes,
    scan_cutoff,
    scan_outcomes,
    source_alpha,
)

DEFAULT_ALPHA_GRID = tuple(np.round(np.arange(5.0, 14.01, 0.5), 10))
CROSSING_TOLERANCE = 0.05


class ThresholdModel(BaseModel):
    """Fault-tolerance threshold of the topological code, linear between its two single-species bounds."""

    name: str = Field(default="custom", description="Short name of the threshold model")
    comp_only: float = Field(description="Tolerable computational error rate when no loss occurs")
    loss_only: float = Field(description="Tolerable located-loss rate when no computational error occurs")

    @field_validator("comp_only", "loss_only")
    @classmethod
    def _check_bound(cls, value: float) -> float:
        if not 0.0 < value < 1.0:
            raise ValueError(f"threshold bounds must lie in (0, 1), got {value}")
        return value


@dataclass(frozen=True)
class TradeoffPoint:
    er_comp: float
    er_loss: float
    set_size: int
    f_av: float
    p_det: float


@dataclass(frozen=True)
class PhotonAccountingRow:
    model: str
    penalty: bool
    er_loss: float
    er_comp_bound: float
    ballistic_alpha: float
    teleport_alpha: float
    logical_alpha: float
    er_comp_at_teleport_alpha: float
    photons_ballistic: float
    photons_teleport: float
    photons_ballistic_alt: float
    photons_teleport_alt: float
    photon_reduction: float

    def to_dict(self) -> Dict:
        return asdict(self)


def threshold_line(model: ThresholdModel) -> Callable[[float], float]:
    """Tolerable loss at a given computational error rate, on the straight line through ``(comp_only, 0)`` and
    ``(0, loss_only)``; it continues below zero past ``comp_only``."""

    def line(er_comp):
        return model.loss_only * (1.0 - np.asarray(er_comp) / model.comp_only)

    return line


def reported_alpha(alpha: float, penalty: bool = True) -> float:
    """Amplitude quoted for a teleporter run: the Bell source amplitude with the penalty, the logical one without."""
    return source_alpha(alpha) if penalty else float(alpha)


def _curve_arrays(table: OutcomeTable) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """``(er_comp, er_loss, f_av, p_det)`` for every greedy prefix."""
    if len(table) == 0:
        raise EmptyScanError(f"Scan at alpha={table.alpha} produced no records")
    f_av, p_det, _ = greedy_prefixes(table)
    floor = 2.0**-TWO_QUBIT_GRAPH.vertex_count
    er_comp = er_from_fidelity(TWO_QUBIT_GRAPH, np.clip(f_av, floor + 1e-12, 1.0))
    return np.asarray(er_comp), 1.0 - p_det, f_av, p_det


def tradeoff_curve(
    alpha: float,
    cutoff: Optional[int] = None,
    table: Optional[OutcomeTable] = None,
    max_points: Optional[int] = None,
    input: str = "ballistic",
) -> List[TradeoffPoint]:
    """Located-loss against computational error for the greedy acceptance sets at one amplitude.

    Records are accepted in order of decreasing corrected fidelity; prefix ``k`` rejects everything else, so its
    loss rate is ``1 - P_det`` and its computational error the two-qubit ER of its ``F_av``.

    :param max_points: Keep at most this many evenly spaced prefixes (first and last always kept)
    """
    table = scan_outcomes(alpha, cutoff, input=input) if table is None else table
    er_comp, er_loss, f_av, p_det = _curve_arrays(table)
    indices = np.arange(len(er_comp))
    if max_points is not None and len(indices) > max_points:
        indices = np.unique(np.round(np.linspace(0, len(er_comp) - 1, max_points)).astype(np.int64))
    logging.debug(f"tradeoff_curve: alpha={alpha} prefixes={len(er_comp)} kept={len(indices)}")
    return [
        TradeoffPoint(float(er_comp[i]), float(er_loss[i]), int(i) + 1, float(f_av[i]), float(p_det[i]))
        for i in indices
    ]


def curve_crosses(model: ThresholdModel, table: OutcomeTable) -> bool:
    """True when some greedy prefix lies on or below the threshold line."""
    er_comp, er_loss, _, _ = _curve_arrays(table)
    return bool(np.any(er_loss <= threshold_line(model)(er_comp)))


def find_crossing_alpha(
    model: ThresholdModel,
    alpha_grid: Sequence[float] = DEFAULT_ALPHA_GRID,
    cutoff_rule: Optional[Callable[[float], int]] = None,
    penalty: bool = True,
    input: str = "ballistic",
) -> float:
    """Smallest logical amplitude whose tradeoff curve reaches the threshold line.

    The grid is walked upwards to the first crossing, then the bracket is bisected until it is narrower than
    0.05 in reported units.

    :raises NoCrossingError: when no grid amplitude crosses
    """
    cutoff_rule = cutoff_rule or scan_cutoff
    grid = sorted(float(alpha) for alpha in alpha_grid)

    def crosses(alpha: float) -> bool:
        return curve_crosses(model, scan_outcomes(alpha, cutoff_rule(alpha), input=input))

    below = None
    for alpha in grid:
        if crosses(alpha):
            above = alpha
            break
        below = alpha
    else:
        raise NoCrossingError(f"Model '{model.name}' is not reached for alpha in [{grid[0]}, {grid[-1]}]")
    if below is None:
        logging.debug(f"find_crossing_alpha: {model.name} already crossed at the smallest grid point {above}")
        return above

    scale = reported_alpha(1.0, penalty)
    while (above - below) * scale > CROSSING_TOLERANCE:
        middle = 0.5 * (below + above)
        if crosses(middle):
            above = middle
        else:
            below = middle
    logging.debug(f"find_crossing_alpha: {model.name} crossing in [{below}, {above}]")
    return 0.5 * (below + above)


def ballistic_alpha_for(er_target: float, bracket: Tuple[float, float] = (2.0, 60.0)) -> float:
    """Amplitude at which the ballistic two-qubit cluster reaches the ER ``er_target``."""
    return float(
        optimize.bisect(lambda alpha: ballistic_er(TWO_QUBIT_GRAPH, alpha) - er_target, *bracket, xtol=1e-6)
    )


def photon_accounting(
    model: ThresholdModel,
    penalty: bool = True,
    alpha_grid: Sequence[float] = DEFAULT_ALPHA_GRID,
    crossing: Optional[float] = None,
) -> PhotonAccountingRow:
    """Photon cost of the ballistic gate against the teleported one at the threshold, with ``n = (alpha/2)^2``.

    ``crossing`` is the logical amplitude from :func:`find_crossing_alpha`; it is searched for when omitted.
    """
    logical = find_crossing_alpha(model, alpha_grid, penalty=penalty) if crossing is None else float(crossing)
    teleport = reported_alpha(logical, penalty)
    ballistic = ballistic_alpha_for(model.comp_only)
    photons_ballistic = (ballistic / 2.0) ** 2
    photons_teleport = (teleport / 2.0) ** 2
    return PhotonAccountingRow(
        model=model.name,
        penalty=penalty,
        er_loss=model.loss_only,
        er_comp_bound=model.comp_only,
        ballistic_alpha=ballistic,
        teleport_alpha=teleport,
        logical_alpha=logical,
        er_comp_at_teleport_alpha=ballistic_er(TWO_QUBIT_GRAPH, teleport),
        photons_ballistic=photons_ballistic,
        photons_teleport=photons_teleport,
        photons_ballistic_alt=ballistic**2,
        photons_teleport_alt=teleport**2,
        photon_reduction=photons_ballistic - photons_teleport,
    )


def summary_table(
    models: Sequence[ThresholdModel],
    penalty: bool = True,
    alpha_grid: Sequence[float] = DEFAULT_ALPHA_GRID,
    crossings: Optional[Dict[str, float]] = None,
) -> List[Dict]:
    """JSON-ready photon accounting rows, one per model."""
    crossings = crossings or {}
    return [
        photon_accounting(model, penalty, alpha_grid, crossings.get(model.name)).to_dict() for model in models
    ]
