from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Optional

import numpy as np
import pandas as pd

from leadlag.core.errors import ComputationError
from leadlag.tops.types import LeadLagPath

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RecoveryScore:
    rmse: float
    switch_latency: Optional[int]
    n_points: int


def recovery_score(estimated: LeadLagPath, truth: pd.Series, burn: int = 0) -> RecoveryScore:
    """
    RMSE of the estimated lag against truth after discarding `burn` days at
    each end of the truth calendar. switch_latency is the largest number of
    days, over all truth changes inside the scored region, until the
    estimate first comes within 1 day of the new value; None when truth never
    changes there or the estimate never gets within 1 day.
    """
    truth = truth.sort_index()
    if burn > 0:
        truth = truth.iloc[burn : len(truth) - burn]
    est = pd.Series(estimated.lag_days, index=pd.Index(estimated.dates, name="date"))
    joined = pd.concat({"truth": truth, "est": est}, axis=1, join="inner").dropna()
    if joined.empty:
        raise ComputationError("no overlap between estimate and truth after burn-in")

    err = joined["est"].to_numpy() - joined["truth"].to_numpy()
    rmse = float(np.sqrt(np.mean(err**2)))
    return RecoveryScore(rmse=rmse, switch_latency=_switch_latency(joined), n_points=int(len(joined)))


def _switch_latency(joined: pd.DataFrame) -> Optional[int]:
    truth = joined["truth"].to_numpy()
    close = np.abs(joined["est"].to_numpy() - truth) <= 1.0
    changes = np.flatnonzero(np.diff(truth) != 0) + 1
    if changes.size == 0:
        return None
    worst = 0
    for c in changes:
        hits = np.flatnonzero(close[c:])
        if hits.size == 0:
            logger.warning("estimate never came within 1 day of truth after change at %s", joined.index[c])
            return None
        worst = max(worst, int(hits[0]))
    return worst


def central_median(estimated: LeadLagPath, burn: int) -> float:
    """Median lag over covered dates with `burn` days trimmed from each end."""
    lag = estimated.lag_days[burn : len(estimated.lag_days) - burn] if burn > 0 else estimated.lag_days
    lag = lag[~np.isnan(lag)]
    if lag.size == 0:
        raise ComputationError("no covered dates left after burn-in")
    return float(np.median(lag))
