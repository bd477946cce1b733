from .tradeoff import CatClusterTradeoffSweep
