from .fidelity import CatClusterFidelitySweep
