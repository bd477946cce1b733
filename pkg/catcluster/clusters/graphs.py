import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from importlib_resources import files
import networkx as nx
import numpy as np

from catcluster.exceptions import InvalidGraphError

Edge = Tuple[int, int]


@dataclass(frozen=True)
class GraphSpec:
    """Vertices ``0..vertex_count-1`` and undirected edges of a cluster graph.

    Edges are stored as ``(min, max)`` pairs in lexicographic order, which is also the default CSIGN application
    order. ``center`` marks the vertex whose local stabilizer short operator patterns refer to, if any.
    """

    vertex_count: int
    edges: Tuple[Edge, ...]
    name: Optional[str] = None
    center: Optional[int] = None
    layout: Dict[str, Any] = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.vertex_count, (int, np.integer)) or self.vertex_count < 1:
            raise InvalidGraphError(f"vertex_count must be a positive integer, got {self.vertex_count!r}")
        normalized = []
        for edge in self.edges:
            if len(edge) != 2:
                raise InvalidGraphError(f"Edge {edge!r} does not have exactly two endpoints")
            u, v = int(edge[0]), int(edge[1])
            if u == v:
                raise InvalidGraphError(f"Self-loop on vertex {u}")
            for vertex in (u, v):
                if not 0 <= vertex < self.vertex_count:
                    raise InvalidGraphError(f"Vertex {vertex} out of range for a {self.vertex_count}-vertex graph")
            normalized.append((min(u, v), max(u, v)))
        if len(set(normalized)) != len(normalized):
            raise InvalidGraphError(f"Duplicate edges in {sorted(normalized)}")
        if self.center is not None and not 0 <= self.center < self.vertex_count:
            raise InvalidGraphError(f"Center vertex {self.center} out of range")
        object.__setattr__(self, "vertex_count", int(self.vertex_count))
        object.__setattr__(self, "edges", tuple(sorted(normalized)))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Sequence[Sequence[int]], **kwargs) -> "GraphSpec":
        return cls(vertex_count, tuple(tuple(edge) for edge in edges), **kwargs)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(self.vertex_count))
        graph.add_edges_from(self.edges)
        return graph

    def neighbors(self, vertex: int) -> List[int]:
        return sorted(self.to_networkx().neighbors(vertex))

    def adjacency(self) -> np.ndarray:
        """Adjacency matrix as ``uint8``, rows and columns in vertex order."""
        return nx.to_numpy_array(self.to_networkx(), nodelist=list(range(self.vertex_count)), dtype=np.uint8)

    def edge_order(self, order: Optional[Sequence[Sequence[int]]] = None) -> List[Edge]:
        """Edges in application order: the stored lexicographic order, or ``order`` after checking it is a
        permutation of the edge set."""
        if order is None:
            return list(self.edges)
        custom = [(min(int(u), int(v)), max(int(u), int(v))) for u, v in order]
        if sorted(custom) != list(self.edges):
            raise InvalidGraphError(f"Edge order {custom} is not a permutation of the graph's edges {list(self.edges)}")
        return custom

    def to_dict(self) -> Dict[str, Any]:
        return {"n": self.vertex_count, "edges": [list(edge) for edge in self.edges]}


def graph_from_dict(data: Dict[str, Any], name: Optional[str] = None) -> GraphSpec:
    """Graph from the ``{"n": int, "edges": [[i, j], ...]}`` layout; preset entries may also carry ``center``."""
    if "n" not in data or "edges" not in data:
        raise InvalidGraphError(f"Graph data needs 'n' and 'edges' keys, got {sorted(data)}")
    return GraphSpec.from_edges(
        data["n"], data["edges"], name=name, center=data.get("center"), layout=data.get("layout", {})
    )


def load_graph(source: Union[str, Path]) -> GraphSpec:
    """Read a user graph from a JSON file."""
    path = Path(source)
    logging.debug(f"Loading graph file {path}")
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise InvalidGraphError(f"Could not read graph file {path}: {exc}") from exc
    return graph_from_dict(data, name=path.stem)


def save_graph(graph: GraphSpec, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(graph.to_dict()) + "\n", encoding="utf-8")


def load_preset_data() -> Dict[str, Dict[str, Any]]:
    """Raw preset table shipped as package data."""
    resource = files("catcluster.clusters").joinpath("data/presets.json")
    return json.loads(resource.read_text(encoding="utf-8"))
