import logging
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Sequence, TypeVar

from tqdm import tqdm

from catcluster.catcluster_graph_factory import CatClusterGraph
from catcluster.clusters.graphs import GraphSpec
from catcluster.exceptions import InvalidSweepConfig
from catcluster.sweeps.config import SweepConfig
from catcluster.utils.output import write_csv

T = TypeVar("T")


class AbstractCatClusterSweep(ABC):
    """
    Abstract class for the CatClusterSweep factory.

    Every CLI command is a sweep: it turns a validated SweepConfig into rows and writes them out. Subclasses
    declare which preset graphs they accept and the CSV columns they produce, and implement `compute`.

    Attributes:
        associated_graphs: (List) of preset graph names the sweep accepts. Empty means any registered graph.

        fieldnames: (List) of CSV column names, in output order.

        description: (str) One-line summary shown by the sweep factory.
    """

    associated_graphs: List[str] = []
    fieldnames: List[str] = []
    description: str = ""

    def __init__(self, config: SweepConfig):
        """Initialize instance attributes.

        :param config: Validated sweep configuration
        :type config: SweepConfig
        """
        self.config = config
        self.validate_config()

    def validate_config(self):
        """Reject configurations the sweep cannot run; raises InvalidSweepConfig."""
        if self.associated_graphs and self.config.graph not in self.associated_graphs:
            raise InvalidSweepConfig(
                f"Graph '{self.config.graph}' is not supported by {type(self).__name__}; "
                f"use one of {self.associated_graphs}"
            )

    @property
    def graph(self) -> GraphSpec:
        return CatClusterGraph(self.config.graph).create_graph()

    def map_points(self, function: Callable[[float], T], points: Sequence[float], desc: str = "") -> List[T]:
        """Evaluate ``function`` on every sweep point, on ``config.threads`` workers, results in input order."""
        logging.info(f"{type(self).__name__}: {len(points)} points on {self.config.threads} thread(s)")
        with ThreadPoolExecutor(max_workers=self.config.threads) as executor:
            results = executor.map(function, points)
            return list(tqdm(results, total=len(points), desc=desc or type(self).__name__, disable=self.config.quiet))

    @abstractmethod
    def compute(self) -> Iterable[Dict[str, Any]]:
        """Rows of the main output file."""

    def run(self) -> List[Path]:
        """Compute and write the output; returns the written paths."""
        logging.debug(f"Running {type(self).__name__} with {self.config}")
        return [write_csv(self.config.out_path, self.fieldnames, self.compute())]
