"""
Scenario files for the synthetic benchmark.

A scenario file is JSON, either a bare list of scenarios or
{"scenarios": [...]}. Example:

    {"scenarios": [
        {"name": "const5", "segments": [[300, 5]], "noise_std": 0.0, "seed": 7},
        {"name": "switch", "segments": [[150, 5], [150, -5]], "seed": 11},
        {"name": "oracle6", "kind": "oracle", "n": 6, "seed": 3}
    ]}
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, ValidationError, field_validator, model_validator

from leadlag.core.errors import ConfigurationError, InputDataError


class LagScenario(BaseModel):
    name: str = "scenario"
    kind: Literal["lagged", "oracle"] = "lagged"
    segments: List[Tuple[int, int]] = Field(default_factory=list, description="(length, lag) per segment")
    noise_std: float = Field(default=0.0, ge=0)
    seed: int = 0
    # benchmark knobs; None falls back to the run configuration
    temperature: Optional[float] = Field(default=None, gt=0)
    margin: Optional[int] = Field(default=None, ge=0)
    burn: int = Field(default=30, ge=0)
    n: int = Field(default=6, ge=2, le=8, description="lattice size for oracle scenarios")

    @field_validator("segments")
    @classmethod
    def _check_segments(cls, segments: List[Tuple[int, int]]) -> List[Tuple[int, int]]:
        for length, lag in segments:
            if length < 1:
                raise ValueError(f"segment length must be >= 1, got {length}")
            if abs(lag) >= length:
                raise ValueError(f"|lag| {abs(lag)} must be smaller than segment length {length}")
        return segments

    @model_validator(mode="after")
    def _check_kind(self) -> "LagScenario":
        if self.kind == "lagged" and not self.segments:
            raise ValueError("lagged scenario needs at least one segment")
        return self

    @property
    def length(self) -> int:
        return sum(length for length, _ in self.segments)


class BenchScenarioFile(BaseModel):
    scenarios: List[LagScenario] = Field(default_factory=list)


def load_scenarios(path: str | Path) -> List[LagScenario]:
    p = Path(path)
    if not p.exists():
        raise InputDataError(f"scenario file not found: {p}")
    try:
        raw = json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as e:
        raise ConfigurationError(f"malformed scenario file {p}: {e}") from e
    if isinstance(raw, list):
        raw = {"scenarios": raw}
    try:
        return BenchScenarioFile.model_validate(raw).scenarios
    except ValidationError as e:
        raise ConfigurationError(f"invalid scenario file {p}: {e}") from e
