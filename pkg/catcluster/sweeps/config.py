from pathlib import Path
from typing import List, Optional

import numpy as np
from pydantic import BaseModel, Field, field_validator, model_validator

from catcluster.catcluster_graph_factory import AVAILABLE_GRAPHS
from catcluster.catcluster_model_factory import AVAILABLE_MODELS
from catcluster.teleport.teleporter import FRAMES, INPUTS, SLICES

STATE_KINDS = ("cat", "bell", "ballistic", "ideal")


class SweepConfig(BaseModel):
    """Settings shared by every CLI command. All computations are deterministic, so there is no seed."""

    alpha_min: float = Field(default=2.0, description="Smallest amplitude of the sweep")
    alpha_max: float = Field(default=20.0, description="Largest amplitude of the sweep")
    steps: int = Field(default=19, description="Number of evenly spaced amplitudes, endpoints included")
    alpha: Optional[float] = Field(default=None, description="Single amplitude for teleport and dump-state")
    graph: str = Field(default="two", description="Preset graph name")
    pattern: Optional[str] = Field(default=None, description="Operator pattern such as XZ, ZXZ or ZZXZZ")
    out_path: Path = Field(description="Output file, or output directory for tradeoff")
    cutoff: Optional[int] = Field(default=None, description="Photon cutoff per teleporter detector")
    model: str = Field(default="barrett", description="Threshold model for tradeoff")
    penalty: bool = Field(default=True, description="Quote teleporter amplitudes as the sqrt(2)-larger source")
    input: str = Field(default="ballistic", description="Teleporter input state")
    slice: Optional[str] = Field(default=None, description="Restrict teleport output to one pattern slice")
    frame: str = Field(default="phase", description="Teleporter correction frame")
    kind: str = Field(default="cat", description="State kind for dump-state")
    relative: bool = Field(default=False, description="Invert V / V_ideal instead of V for the visibility ER")
    long: bool = Field(default=False, description="Write the long metrics format")
    threads: int = Field(default=1, description="Worker threads for sweep points")
    quiet: bool = Field(default=False, description="Disable progress bars")

    @field_validator("steps")
    @classmethod
    def _check_steps(cls, value: int) -> int:
        if value < 2:
            raise ValueError(f"steps must be at least 2, got {value}")
        return value

    @field_validator("threads")
    @classmethod
    def _check_threads(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"threads must be at least 1, got {value}")
        return value

    @field_validator("graph")
    @classmethod
    def _check_graph(cls, value: str) -> str:
        if value not in AVAILABLE_GRAPHS:
            raise ValueError(f"unknown graph '{value}', expected one of {list(AVAILABLE_GRAPHS)}")
        return value

    @field_validator("model")
    @classmethod
    def _check_model(cls, value: str) -> str:
        if value not in AVAILABLE_MODELS:
            raise ValueError(f"unknown model '{value}', expected one of {list(AVAILABLE_MODELS)}")
        return value

    @field_validator("pattern")
    @classmethod
    def _check_pattern(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and (not value or set(value.upper()) - set("IXZ")):
            raise ValueError(f"pattern '{value}' must be made of the letters I, X and Z")
        return value.upper() if value is not None else None

    @field_validator("input")
    @classmethod
    def _check_input(cls, value: str) -> str:
        if value not in INPUTS:
            raise ValueError(f"unknown teleporter input '{value}', expected one of {list(INPUTS)}")
        return value

    @field_validator("frame")
    @classmethod
    def _check_frame(cls, value: str) -> str:
        if value not in FRAMES:
            raise ValueError(f"unknown correction frame '{value}', expected one of {list(FRAMES)}")
        return value

    @field_validator("slice")
    @classmethod
    def _check_slice(cls, value: Optional[str]) -> Optional[str]:
        if value is not None and value not in SLICES:
            raise ValueError(f"unknown slice '{value}', expected one of {list(SLICES)}")
        return value

    @field_validator("kind")
    @classmethod
    def _check_kind(cls, value: str) -> str:
        if value not in STATE_KINDS:
            raise ValueError(f"unknown state kind '{value}', expected one of {list(STATE_KINDS)}")
        return value

    @model_validator(mode="after")
    def _check_range(self) -> "SweepConfig":
        if not 0 < self.alpha_min < self.alpha_max:
            raise ValueError(f"need 0 < alpha_min < alpha_max, got {self.alpha_min} and {self.alpha_max}")
        if self.alpha is not None and self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        return self

    def alphas(self) -> List[float]:
        return [float(alpha) for alpha in np.linspace(self.alpha_min, self.alpha_max, self.steps)]
