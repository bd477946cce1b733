from .teleport import CatClusterTeleportSweep
