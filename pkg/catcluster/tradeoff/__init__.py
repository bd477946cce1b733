from .tradeoff import (
    DEFAULT_ALPHA_GRID,
    PhotonAccountingRow,
    ThresholdModel,
    TradeoffPoint,
    ballistic_alpha_for,
    curve_crosses,
    find_crossing_alpha,
    photon_accounting,
    reported_alpha,
    summary_table,
    threshold_line,
    tradeoff_curve,
)
