"""
Synthetic pairs with a known lag path.

Randomness comes from numpy's PCG64 bit generator (`default_rng(seed)`),
so a seed reproduces the same series on every platform.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from datetime import date

import numpy as np
import pandas as pd

from leadlag.series_prep.returns import standardize
from leadlag.series_prep.types import ReturnSeries, as_dates
from leadlag.synthetic.scenarios import LagScenario
from leadlag.tops.distance import distance_matrix
from leadlag.tops.types import DistanceMatrix

logger = logging.getLogger(__name__)

SYNTHETIC_START = date(2000, 1, 3)


@dataclass(frozen=True, eq=False)
class LaggedPair:
    x: ReturnSeries
    y: ReturnSeries
    truth: pd.Series  # lag in days, indexed by date


def generate_lagged_pair(scenario: LagScenario, *, start: date = SYNTHETIC_START) -> LaggedPair:
    """
    X iid N(0, 1); Y(t) = X(t - l(t)) + noise_std * eta(t). Days whose source
    index X(t - l(t)) falls outside the draw are dropped from X, Y and truth.
    Both outputs are standardized.
    """
    n = scenario.length
    rng = np.random.default_rng(scenario.seed)
    x = rng.standard_normal(n)
    eta = rng.standard_normal(n)
    lag = np.repeat([s[1] for s in scenario.segments], [s[0] for s in scenario.segments])

    source = np.arange(n) - lag
    valid = (source >= 0) & (source < n)
    dropped = int((~valid).sum())
    if dropped:
        logger.info("scenario %s: dropped %d day(s) whose lagged source is outside the sample", scenario.name, dropped)

    y = x[np.clip(source, 0, n - 1)] + scenario.noise_std * eta
    dates = as_dates(pd.bdate_range(start, periods=n)[valid])
    x_kept, y_kept = x[valid], y[valid]
    return LaggedPair(
        x=standardize(_raw(x_kept, dates, "X")),
        y=standardize(_raw(y_kept, dates, "Y")),
        truth=pd.Series(lag[valid].astype(float), index=pd.Index(dates, name="date"), name="lag"),
    )


def random_distance_matrix(n: int, seed: int) -> DistanceMatrix:
    """Distance matrix of two independent standard normal series."""
    rng = np.random.default_rng(seed)
    return distance_matrix(rng.standard_normal(n), rng.standard_normal(n))


def _raw(values: np.ndarray, dates, name: str) -> ReturnSeries:
    return ReturnSeries(
        values=values,
        dates=dates,
        mean=float(values.mean()),
        std=float(values.std(ddof=1)),
        standardized=False,
        instrument=name,
    )
