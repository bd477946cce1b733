import logging
from typing import Dict

from catcluster.clusters.graphs import GraphSpec, graph_from_dict, load_preset_data
from catcluster.exceptions import InvalidCatClusterGraph

AVAILABLE_GRAPHS = {
    "two": {
        "description": "Two qubits joined by a single CSIGN",
        "display_name": "2 qubit cluster",
    },
    "three": {
        "description": "Three qubits in a line",
        "display_name": "3 qubit cluster",
    },
    "fiveLinear": {
        "description": "Five qubits in a line; its middle stabilizer only involves three of them",
        "display_name": "5 qubit linear cluster",
    },
    "fiveStar": {
        "description": "Center qubit 2 joined to four leaves",
        "display_name": "5 qubit star cluster",
    },
    "seventeenStar": {
        "description": "Center qubit 0, its four neighbours 1-4, each neighbour joined to three further leaves",
        "display_name": "17 qubit star cluster",
    },
    "unitCell": {
        "description": "18 qubit cell of the 3D topological lattice: six face qubits (0-5) and twelve cube-edge "
        "qubits (6-17)",
        "display_name": "Topological unit cell",
    },
}


class CatClusterGraph:
    """
    Implement the Factory pattern for the preset cluster graphs used by the builders, metrics and sweeps.
    """

    def __init__(self, graph: str):
        """Initialize instance attributes.

        :param graph: Name of the preset graph.
        :type graph: str
        """
        logging.debug(f"Executing CatClusterGraph constructor. graph: {graph}")
        self.graph = graph

    def create_graph(self) -> GraphSpec:
        """Build the GraphSpec of the preset named by `graph`.

        :return: The preset graph, with its center vertex (if any) and layout notes attached.
        :rtype: GraphSpec
        """
        if self.graph not in AVAILABLE_GRAPHS:
            raise InvalidCatClusterGraph(
                'Graph not supported: "{}". Available graphs:\n{}'.format(
                    self.graph, "\n".join([f"{k}: {v['description']}" for k, v in AVAILABLE_GRAPHS.items()])
                )
            )
        return graph_from_dict(load_preset_data()[self.graph], name=self.graph)

    @classmethod
    def display_available_graphs(cls) -> Dict[str, Dict[str, str]]:
        """Simple class method for returning dict of available graphs and descriptions
        :return: Dict containing graph name, description and display name
        :rtype: Dict[str, Dict[str, str]]
        """
        return AVAILABLE_GRAPHS


def preset_graph(name: str) -> GraphSpec:
    return CatClusterGraph(name).create_graph()
