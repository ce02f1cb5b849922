"""
Per-run configuration assembled from CLI flags on top of LeadLagSettings.
"""

from __future__ import annotations

import argparse
from datetime import date
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional

from pydantic import BaseModel, Field, ValidationError, field_validator

from leadlag.core.config import LeadLagSettings
from leadlag.core.errors import ConfigurationError, InputDataError
from leadlag.series_prep.types import PriceField
from leadlag.tops.types import EnsembleConfig

# fields that do not change any output value and stay out of file headers
_HEADER_EXCLUDE = {"out", "workers"}


class RunConfig(BaseModel):
    vix: Optional[Path] = None
    futures: Optional[Path] = None
    scenarios: Optional[Path] = None
    price_field: Literal["close", "settle", "both"] = "close"
    temperature: float = Field(default=2.0, gt=0)
    temperatures: List[float] = Field(default_factory=list, description="extra temperatures for the robustness scan")
    margin: int = Field(default=30, ge=0)
    window: int = Field(default=20, ge=3)
    sweep_windows: bool = False
    alpha: float = Field(default=0.05, gt=0, lt=1)
    phase_breaks: List[date] = Field(default_factory=list)
    histogram_bin_width: float = Field(default=1.0, gt=0)
    tie_tolerance: float = Field(default=1e-12, gt=0)
    out: Path = Path("out")
    seed: int = 0
    workers: int = Field(default=1, ge=1)

    @field_validator("phase_breaks")
    @classmethod
    def _sorted_breaks(cls, breaks: List[date]) -> List[date]:
        if any(b <= a for a, b in zip(breaks, breaks[1:])):
            raise ValueError("phase breaks must be strictly increasing")
        return breaks

    @field_validator("temperatures")
    @classmethod
    def _positive_temperatures(cls, values: List[float]) -> List[float]:
        if any(not t > 0 for t in values):
            raise ValueError("scan temperatures must be positive")
        return values

    @classmethod
    def from_args(cls, args: argparse.Namespace, settings: LeadLagSettings) -> "RunConfig":
        """Flags left unset (None) fall back to settings."""

        def pick(name: str, default: Any) -> Any:
            value = getattr(args, name, None)
            return default if value is None else value

        try:
            return cls(
                vix=pick("vix", None),
                futures=pick("futures", None),
                scenarios=pick("scenarios", None),
                price_field=pick("price_field", "close"),
                temperature=pick("temperature", settings.temperature),
                temperatures=pick("temperatures", []),
                margin=pick("margin", settings.margin),
                window=pick("window", settings.window),
                sweep_windows=bool(getattr(args, "sweep_windows", False)),
                alpha=pick("alpha", settings.alpha),
                phase_breaks=pick("phases", settings.phase_breaks),
                histogram_bin_width=settings.histogram_bin_width,
                tie_tolerance=settings.tie_tolerance,
                out=pick("out", Path("out")),
                seed=pick("seed", 0),
                workers=pick("workers", settings.workers),
            )
        except ValidationError as e:
            raise ConfigurationError(f"invalid run configuration: {e}") from e

    def require(self, *names: str) -> None:
        """Every named input path is set and exists."""
        for name in names:
            path = getattr(self, name)
            if path is None:
                raise InputDataError(f"--{name} is required")
            if not Path(path).exists():
                raise InputDataError(f"input file not found: {path}")

    def price_fields(self) -> List[PriceField]:
        return ["close", "settle"] if self.price_field == "both" else [self.price_field]

    def ensemble(self) -> EnsembleConfig:
        return EnsembleConfig(
            margin=self.margin,
            temperature=self.temperature,
            tie_tolerance=self.tie_tolerance,
            workers=self.workers,
        )

    def header(self, command: str) -> Dict[str, Any]:
        payload = self.model_dump(mode="json", exclude=_HEADER_EXCLUDE)
        payload["command"] = command
        return payload


def parse_phase_breaks(raw: str) -> List[date]:
    """'2006-02-24,2009-01-29' -> dates; empty string -> no breaks."""
    try:
        return [date.fromisoformat(part.strip()) for part in raw.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid phase break list {raw!r}: {e}") from e


def parse_temperatures(raw: str) -> List[float]:
    """'0.5,1,2' -> [0.5, 1.0, 2.0]."""
    try:
        return [float(part) for part in raw.split(",") if part.strip()]
    except ValueError as e:
        raise argparse.ArgumentTypeError(f"invalid temperature list {raw!r}: {e}") from e
