from .catcluster_graph_factory import CatClusterGraph
from .catcluster_model_factory import CatClusterModel
from .catcluster_sweep_factory import CatClusterSweep
