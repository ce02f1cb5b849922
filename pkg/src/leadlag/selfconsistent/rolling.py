"""
Self-consistency check of an inferred lead-lag path: in trailing windows,
regress Y(t) on X(t - <x(t)>) and flag windows whose slope is significant.
"""

from __future__ import annotations

import logging
from datetime import date
from typing import Iterable, Optional, Sequence

import numpy as np
import pandas as pd

from leadlag.core.errors import ComputationError, ConfigurationError, InsufficientDataError, LengthMismatchError
from leadlag.selfconsistent.types import AlignedPairs, SelfConsistencyReport, WindowSweep
from leadlag.series_prep.types import ReturnSeries
from leadlag.stats.regression import rolling_ols
from leadlag.tops.types import LeadLagPath

logger = logging.getLogger(__name__)

MIN_WINDOW, MAX_WINDOW = 5, 60
SWEEP_WINDOWS = range(MIN_WINDOW, MAX_WINDOW + 1)


def round_half_away(values: np.ndarray) -> np.ndarray:
    return np.sign(values) * np.floor(np.abs(values) + 0.5)


def lagged_alignment(x: ReturnSeries, y: ReturnSeries, path: LeadLagPath) -> AlignedPairs:
    """Pairs (Y(tau), X(tau - l(tau))), l = lag rounded half away from zero."""
    n = len(y)
    if len(x) != n:
        raise LengthMismatchError(f"X and Y differ in length: {len(x)} vs {n}")
    if len(path.dates) != n:
        raise LengthMismatchError(f"path covers {len(path.dates)} dates, Y has {n}")

    covered = np.flatnonzero(path.covered)
    lags = round_half_away(path.lag_days[covered]).astype(np.int64)
    source = covered - lags
    ok = (source >= 0) & (source <= n - 1)
    dropped = int((~ok).sum())
    if dropped:
        logger.info("self-consistency alignment dropped %d pair(s) with lagged index out of range", dropped)
    if not ok.any():
        raise ComputationError("no overlap between the lagged regressor and Y")

    tau = covered[ok]
    return AlignedPairs(
        dates=tuple(y.dates[i] for i in tau),
        y=np.asarray(y.values, dtype=float)[tau],
        x=np.asarray(x.values, dtype=float)[source[ok]],
        lags=lags[ok],
        dropped=dropped,
    )


def rolling_self_consistent_test(
    pairs: AlignedPairs,
    window: int,
    alpha: float = 0.05,
    *,
    allow_any_window: bool = False,
) -> SelfConsistencyReport:
    if not allow_any_window and not MIN_WINDOW <= window <= MAX_WINDOW:
        raise ConfigurationError(f"window {window} outside [{MIN_WINDOW}, {MAX_WINDOW}]")
    if window < 3:
        raise ConfigurationError("window must hold at least 3 pairs")
    if not 0 < alpha < 1:
        raise ConfigurationError(f"alpha must lie in (0, 1), got {alpha}")
    if len(pairs) < window:
        raise InsufficientDataError(f"{len(pairs)} aligned pairs, window needs {window}")

    fits = rolling_ols(pairs.y, pairs.x, window)
    records = pd.DataFrame(
        {
            "date": [pairs.dates[i] for i in fits["end"]],
            "window": window,
            "slope": fits["slope"].to_numpy(),
            "p_value": fits["p_value"].to_numpy(),
        }
    )
    records["significant"] = (records["p_value"] < alpha).fillna(False).astype(bool)
    logger.debug(
        "self-consistency window=%d records=%d significant=%d",
        window,
        len(records),
        int(records["significant"].sum()),
    )
    return SelfConsistencyReport(window=window, alpha=alpha, records=records)


def window_sweep(
    pairs: AlignedPairs,
    windows: Iterable[int] = SWEEP_WINDOWS,
    alpha: float = 0.05,
    *,
    majority: float = 0.5,
) -> WindowSweep:
    """
    One report per window size plus a per-date mask: the fraction of the
    window sizes evaluable at that date whose test is significant.
    """
    reports = {
        w: rolling_self_consistent_test(pairs, w, alpha) for w in windows if len(pairs) >= w
    }
    if not reports:
        raise InsufficientDataError(f"{len(pairs)} aligned pairs is shorter than every sweep window")
    stacked = pd.concat([r.records[["date", "significant"]] for r in reports.values()], ignore_index=True)
    grouped = stacked.groupby("date", sort=True)["significant"].mean()
    mask = pd.DataFrame(
        {
            "date": list(grouped.index),
            "frac_significant": grouped.to_numpy(dtype=float),
        }
    )
    mask["significant_majority"] = mask["frac_significant"] >= majority
    return WindowSweep(reports=reports, mask=mask, alpha=alpha)


def significance_mask(dates: Sequence[date], significant_dates: Iterable[date]) -> np.ndarray:
    hits = set(significant_dates)
    return np.fromiter((d in hits for d in dates), dtype=bool, count=len(dates))


def mark_significance(path: LeadLagPath, report: SelfConsistencyReport, sweep: Optional[WindowSweep] = None) -> LeadLagPath:
    """Fill the path's significance flags from the single-window report (or the sweep majority)."""
    if sweep is not None:
        hits = sweep.mask.loc[sweep.mask["significant_majority"], "date"]
        return path.with_significance(significance_mask(path.dates, hits))
    return path.with_significance(significance_mask(path.dates, report.significant_dates))
