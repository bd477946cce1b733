from .config import STATE_KINDS, SweepConfig
