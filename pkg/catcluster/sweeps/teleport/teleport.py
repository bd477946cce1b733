import logging
from typing import Any, Dict, List

from catcluster.exceptions import InvalidSweepConfig
from catcluster.sweeps.catcluster_abstract_sweep import AbstractCatClusterSweep
from catcluster.teleport.teleporter import pattern_slice, scan_outcomes

RECORD_FIELDNAMES = ["n1", "n2", "n3", "n4", "prob", "fidelity_raw", "fidelity_corrected", "correction_id"]
SLICE_FIELDNAMES = ["n_a", "n_b", "prob", "fidelity"]


class CatClusterTeleportSweep(AbstractCatClusterSweep):
    """Every teleporter detection pattern at one amplitude, or one two-parameter slice of them"""

    description = "Teleporter detection outcomes with probability and corrected fidelity at one amplitude"

    def validate_config(self):
        super().validate_config()
        if self.config.alpha is None:
            raise InvalidSweepConfig("The teleport command needs --alpha")

    @property
    def fieldnames(self) -> List[str]:
        return SLICE_FIELDNAMES if self.config.slice else RECORD_FIELDNAMES

    def compute(self) -> List[Dict[str, Any]]:
        table = scan_outcomes(self.config.alpha, self.config.cutoff, input=self.config.input, frame=self.config.frame)
        logging.info(
            f"teleport: alpha={self.config.alpha} records={len(table)} tail={table.tail:.3e} "
            f"max fidelity={table.max_fidelity:.6f}"
        )
        if self.config.slice:
            return [
                {"n_a": int(n_a), "n_b": int(n_b), "prob": prob, "fidelity": fid}
                for n_a, n_b, prob, fid in pattern_slice(table, self.config.slice)
            ]
        return table.to_rows()
