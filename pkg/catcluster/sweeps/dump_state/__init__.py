from .dump_state import CatClusterDumpStateSweep
