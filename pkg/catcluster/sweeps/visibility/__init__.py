from .visibility import CatClusterVisibilitySweep
