from __future__ import annotations

from dataclasses import dataclass, field
from datetime import date
from typing import Dict, Tuple

import numpy as np
import pandas as pd


@dataclass(frozen=True, eq=False)
class AlignedPairs:
    """(Y(tau), X(tau - lag(tau))) for every usable tau, in calendar order."""

    dates: Tuple[date, ...]
    y: np.ndarray
    x: np.ndarray
    lags: np.ndarray
    dropped: int = 0

    def __len__(self) -> int:
        return len(self.dates)


@dataclass(frozen=True, eq=False)
class SelfConsistencyReport:
    """One row per date with a full trailing window: date, window, slope, p_value, significant."""

    window: int
    alpha: float
    records: pd.DataFrame

    @property
    def significant_dates(self) -> Tuple[date, ...]:
        rows = self.records[self.records["significant"]]
        return tuple(rows["date"])

    def to_frame(self) -> pd.DataFrame:
        out = self.records[["date", "window", "slope", "p_value", "significant"]].copy()
        out["date"] = [d.isoformat() for d in out["date"]]
        return out


@dataclass(frozen=True, eq=False)
class WindowSweep:
    reports: Dict[int, SelfConsistencyReport]
    mask: pd.DataFrame  # date, frac_significant, significant_majority
    alpha: float = field(default=0.05)

    def records_frame(self) -> pd.DataFrame:
        frames = [r.to_frame() for _, r in sorted(self.reports.items())]
        if not frames:
            return pd.DataFrame(columns=["date", "window", "slope", "p_value", "significant"])
        return pd.concat(frames, ignore_index=True)

    def mask_frame(self) -> pd.DataFrame:
        out = self.mask.copy()
        out["date"] = [d.isoformat() for d in out["date"]]
        return out
