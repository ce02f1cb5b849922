"""
Per-phase distribution of the lead-lag path.

Breaks b1 < b2 < ... split the calendar into phase 1 (d < b1),
phase 2 (b1 <= d < b2), ... and a last phase (d >= b_last).
"""

from __future__ import annotations

import logging
from datetime import date
from typing import Sequence, Tuple

import numpy as np
import pandas as pd

from leadlag.core.errors import ConfigurationError
from leadlag.tops.types import LeadLagPath

logger = logging.getLogger(__name__)


def phase_labels(dates: Sequence[date], breaks: Sequence[date]) -> np.ndarray:
    """1-based phase number of every date."""
    ordinals = np.array([d.toordinal() for d in dates], dtype=np.int64)
    edges = np.array([b.toordinal() for b in breaks], dtype=np.int64)
    return np.searchsorted(edges, ordinals, side="right") + 1


def phase_summary(
    path: LeadLagPath, breaks: Sequence[date], bin_width: float = 1.0
) -> Tuple[pd.DataFrame, pd.DataFrame]:
    """
    (histograms, summary). Histogram bins are centred on multiples of
    bin_width; summary has the fraction of negative, zero and positive lags
    and the mean lag per phase. Only covered dates count.
    """
    if not bin_width > 0:
        raise ConfigurationError(f"histogram bin width must be positive, got {bin_width}")
    covered = path.covered
    dates = [d for d, keep in zip(path.dates, covered) if keep]
    lags = path.lag_days[covered]
    labels = phase_labels(dates, breaks)

    histograms = []
    summary = []
    for phase in range(1, len(breaks) + 2):
        sel = labels == phase
        lo = breaks[phase - 2] if phase >= 2 else None
        hi = breaks[phase - 1] if phase <= len(breaks) else None
        values = lags[sel]
        n = int(values.size)
        if n == 0:
            logger.warning("phase %d has no covered dates", phase)
        summary.append(
            {
                "phase": phase,
                "start": lo.isoformat() if lo else "",
                "end": hi.isoformat() if hi else "",
                "n": n,
                "frac_negative": float(np.mean(values < 0)) if n else np.nan,
                "frac_zero": float(np.mean(values == 0)) if n else np.nan,
                "frac_positive": float(np.mean(values > 0)) if n else np.nan,
                "mean_lag": float(values.mean()) if n else np.nan,
            }
        )
        if n:
            centers = bin_width * np.floor(values / bin_width + 0.5)
            counts = pd.Series(centers).value_counts().sort_index()
            histograms.append(
                pd.DataFrame({"phase": phase, "bin_center": counts.index.to_numpy(), "count": counts.to_numpy()})
            )

    hist = (
        pd.concat(histograms, ignore_index=True)
        if histograms
        else pd.DataFrame(columns=["phase", "bin_center", "count"])
    )
    return hist, pd.DataFrame(summary)
