from __future__ import annotations

import math

import numpy as np

from leadlag.core.errors import DegenerateSeriesError, InsufficientDataError
from leadlag.series_prep.types import PriceSeries, ReturnSeries


def log_returns(series: PriceSeries) -> ReturnSeries:
    """r(t) = ln p(t) - ln p(t-1), dated at t."""
    if len(series) < 2:
        raise InsufficientDataError(f"{series.instrument}: need at least 2 prices, got {len(series)}")
    values = np.diff(np.log(series.prices))
    std = float(values.std(ddof=1)) if values.size >= 2 else math.nan
    return ReturnSeries(
        values=values,
        dates=series.dates[1:],
        mean=float(values.mean()),
        std=std,
        standardized=False,
        instrument=series.instrument,
    )


def standardize(returns: ReturnSeries) -> ReturnSeries:
    """R(t) = (r(t) - r_bar) / sigma with the sample (n-1) standard deviation."""
    r = np.asarray(returns.values, dtype=float)
    if r.size < 2:
        raise InsufficientDataError(f"{returns.instrument or 'returns'}: need at least 2 returns to standardize")
    mean = float(r.mean())
    sigma = float(r.std(ddof=1))
    if not math.isfinite(sigma) or sigma == 0.0:
        raise DegenerateSeriesError(f"{returns.instrument or 'returns'}: zero variance, cannot standardize")
    standardized = (r - mean) / sigma
    return ReturnSeries(
        values=standardized,
        dates=returns.dates,
        mean=returns.mean if returns.standardized else mean,
        std=returns.std if returns.standardized else sigma,
        standardized=True,
        instrument=returns.instrument,
    )
