from .error_rates import ErPoint, ballistic_er, crossing_alpha, er_point, er_sweep
from .fidelity import depolarized_cluster_fidelity, er_from_fidelity, fidelity, stabilizer_weight_enumerator
from .visibility import (
    OperatorPattern,
    correlation,
    er_from_visibility,
    ideal_visibility,
    stabilizer_sign,
    visibility,
)
