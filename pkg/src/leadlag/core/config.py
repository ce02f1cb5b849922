"""
Process-wide defaults. Values come from LEADLAG_* environment variables or a
.env file; CLI flags override them per run (see leadlag.commands.RunConfig).
"""

from __future__ import annotations

import os
from datetime import date
from functools import lru_cache
from typing import List

from dotenv import load_dotenv
from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict

load_dotenv()

# Event dates that split the sample: VIX options launch, first VIX ETP.
DEFAULT_PHASE_BREAKS = (date(2006, 2, 24), date(2009, 1, 29))


class LeadLagSettings(BaseSettings):
    model_config = SettingsConfigDict(env_prefix="LEADLAG_", extra="ignore")

    temperature: float = Field(default=2.0, gt=0)
    margin: int = Field(default=30, ge=0)
    window: int = Field(default=20, ge=2)
    alpha: float = Field(default=0.05, gt=0, lt=1)
    tie_tolerance: float = Field(default=1e-12, gt=0)
    workers: int = Field(default_factory=lambda: os.cpu_count() or 1, ge=1)
    phase_breaks: List[date] = Field(default_factory=lambda: list(DEFAULT_PHASE_BREAKS))
    histogram_bin_width: float = Field(default=1.0, gt=0)
    log_dir: str = "logs"
    log_level: str = "INFO"


@lru_cache(maxsize=1)
def get_settings() -> LeadLagSettings:
    return LeadLagSettings()
