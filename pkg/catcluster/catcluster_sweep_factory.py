import logging
from typing import Dict, List, Type, Union

from catcluster.catcluster_graph_factory import AVAILABLE_GRAPHS
from catcluster.exceptions import InvalidCatClusterSweep
from catcluster.sweeps import SweepConfig
from catcluster.sweeps.catcluster_abstract_sweep import AbstractCatClusterSweep
from catcluster.sweeps.dump_state import CatClusterDumpStateSweep
from catcluster.sweeps.fidelity import CatClusterFidelitySweep
from catcluster.sweeps.teleport import CatClusterTeleportSweep
from catcluster.sweeps.tradeoff import CatClusterTradeoffSweep
from catcluster.sweeps.visibility import CatClusterVisibilitySweep

AVAILABLE_SWEEPS = {
    "fidelity": "Ballistic cluster fidelity and error rate over an amplitude sweep",
    "visibility": "Stabilizer visibility and error rate over an amplitude sweep",
    "teleport": "Teleporter detection outcomes at one amplitude",
    "tradeoff": "Loss/error tradeoff curves, threshold crossing and photon accounting",
    "dump-state": "Cat, Bell, ballistic or ideal cluster state as JSON",
}

_SWEEP_CLASSES: Dict[str, Type[AbstractCatClusterSweep]] = {
    "fidelity": CatClusterFidelitySweep,
    "visibility": CatClusterVisibilitySweep,
    "teleport": CatClusterTeleportSweep,
    "tradeoff": CatClusterTradeoffSweep,
    "dump-state": CatClusterDumpStateSweep,
}


class CatClusterSweep:
    """
    Implement the Factory pattern for the CLI commands. Each command is a sweep class that turns a SweepConfig into
    CSV or JSON files.
    """

    def __init__(self, command: str, config: Union[SweepConfig, dict]):
        """Initialize instance attributes.

        :param command: Name of the CLI command, one of AVAILABLE_SWEEPS.
        :type command: str
        :param config: Sweep settings, validated into a SweepConfig if given as a dict.
        :type config: Union[SweepConfig, dict]
        """
        logging.debug(f"Executing CatClusterSweep constructor. command: {command}")
        self.command = command
        self.config = config if isinstance(config, SweepConfig) else SweepConfig(**config)

    def create_sweep(self) -> AbstractCatClusterSweep:
        """
        Create the sweep for `command`.

        :return: The sweep instance, with its configuration already checked against the command.
        :rtype: AbstractCatClusterSweep
        """
        if self.command in _SWEEP_CLASSES:
            return _SWEEP_CLASSES[self.command](self.config)

        raise InvalidCatClusterSweep(
            'Sweep not supported: "{}". Available sweeps:\n{}'.format(
                self.command, "\n".join([f"{k}: {v}" for k, v in AVAILABLE_SWEEPS.items()])
            )
        )

    @classmethod
    def display_available_sweeps(cls) -> Dict[str, str]:
        """Simple class method for returning dict of available sweeps and descriptions
        :return: Dict containing sweep name and description
        :rtype: Dict[str, str]
        """
        return AVAILABLE_SWEEPS

    @classmethod
    def display_all_associated_graphs(cls) -> Dict[str, List[str]]:
        """Preset graphs each sweep accepts; sweeps without a restriction accept every registered graph.

        :rtype: Dict[str, List[str]]
        """
        return {
            command: list(sweep_class.associated_graphs or AVAILABLE_GRAPHS)
            for command, sweep_class in _SWEEP_CLASSES.items()
        }
