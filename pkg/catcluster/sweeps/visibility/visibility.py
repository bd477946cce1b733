from typing import Any, Dict, List

from catcluster.exceptions import InvalidSweepConfig
from catcluster.metrics.error_rates import er_point
from catcluster.metrics.visibility import OperatorPattern, stabilizer_sign
from catcluster.sweeps.catcluster_abstract_sweep import AbstractCatClusterSweep
from catcluster.sweeps.fidelity.fidelity import LONG_FIELDNAMES, SMALL_GRAPHS


class CatClusterVisibilitySweep(AbstractCatClusterSweep):
    """Stabilizer visibility of the ballistic cluster next to the ideal cluster's, with the ER"""

    associated_graphs = SMALL_GRAPHS
    description = "Stabilizer visibility, ideal visibility and error rate per qubit over an amplitude sweep"

    def validate_config(self):
        super().validate_config()
        if not self.config.pattern:
            raise InvalidSweepConfig("The visibility sweep needs a --pattern such as XZ, ZXZ or ZZXZZ")
        self.pattern = OperatorPattern.for_graph(self.config.pattern, self.graph)
        stabilizer_sign(self.graph, self.pattern)

    @property
    def fieldnames(self) -> List[str]:
        return LONG_FIELDNAMES if self.config.long else ["alpha", "visibility", "ideal_visibility", "er"]

    def compute(self) -> List[Dict[str, Any]]:
        graph, pattern, relative = self.graph, self.pattern, self.config.relative
        points = self.map_points(
            lambda alpha: er_point(graph, alpha, "visibility", pattern, relative), self.config.alphas(), "visibility"
        )
        if self.config.long:
            return [
                {"alpha": p.alpha, "graph": p.graph, "quantity": f"visibility:{pattern}", "value": p.value, "er": p.er}
                for p in points
            ]
        return [{"alpha": p.alpha, "visibility": p.value, "ideal_visibility": p.reference, "er": p.er} for p in points]
