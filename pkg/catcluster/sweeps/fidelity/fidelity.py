from typing import Any, Dict, List

from catcluster.metrics.error_rates import er_point
from catcluster.sweeps.catcluster_abstract_sweep import AbstractCatClusterSweep

SMALL_GRAPHS = ["two", "three", "fiveLinear", "fiveStar"]
LONG_FIELDNAMES = ["alpha", "graph", "quantity", "value", "er"]


class CatClusterFidelitySweep(AbstractCatClusterSweep):
    """Ballistic cluster fidelity against the ideal cluster, and its ER, over an amplitude grid"""

    associated_graphs = SMALL_GRAPHS
    description = "Ballistic cluster fidelity and error rate per qubit over an amplitude sweep"

    @property
    def fieldnames(self) -> List[str]:
        return LONG_FIELDNAMES if self.config.long else ["alpha", "fidelity", "er"]

    def compute(self) -> List[Dict[str, Any]]:
        graph = self.graph
        points = self.map_points(lambda alpha: er_point(graph, alpha, "fidelity"), self.config.alphas(), "fidelity")
        if self.config.long:
            return [
                {"alpha": p.alpha, "graph": p.graph, "quantity": p.quantity, "value": p.value, "er": p.er}
                for p in points
            ]
        return [{"alpha": p.alpha, "fidelity": p.value, "er": p.er} for p in points]
