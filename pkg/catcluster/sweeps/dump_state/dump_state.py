from pathlib import Path
from typing import List

from catcluster.clusters.builder import build_ballistic, build_ideal
from catcluster.exceptions import InvalidSweepConfig
from catcluster.states.coherent import SuperposedState, cat_state
from catcluster.states.serialization import dump_state, state_to_dict
from catcluster.sweeps.catcluster_abstract_sweep import AbstractCatClusterSweep
from catcluster.teleport.teleporter import bell_state


class CatClusterDumpStateSweep(AbstractCatClusterSweep):
    """Write one state (cat, Bell resource, ballistic or ideal cluster) in the JSON dump format"""

    description = "Dump a cat, Bell, ballistic or ideal cluster state as JSON"

    def validate_config(self):
        super().validate_config()
        if self.config.alpha is None:
            raise InvalidSweepConfig("The dump-state command needs --alpha")

    def build(self) -> SuperposedState:
        alpha, kind = self.config.alpha, self.config.kind
        if kind == "cat":
            return cat_state(alpha)
        if kind == "bell":
            return bell_state(alpha)
        if kind == "ballistic":
            return build_ballistic(self.graph, alpha)
        return build_ideal(self.graph, alpha)

    def compute(self) -> List[dict]:
        return [state_to_dict(self.build())]

    def run(self) -> List[Path]:
        path = Path(self.config.out_path)
        path.parent.mkdir(parents=True, exist_ok=True)
        dump_state(self.build(), path)
        return [path]
