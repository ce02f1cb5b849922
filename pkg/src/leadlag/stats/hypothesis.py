"""
Normality and unit-root tests.

ADF p-values come from statsmodels' `adfuller`, which evaluates MacKinnon's
published response-surface regressions (MacKinnon 1994, 2010) from
coefficient tables shipped with statsmodels.
"""

from __future__ import annotations

import logging
import math
from typing import Literal, Sequence, Union

import numpy as np
from scipy import stats as sps
from statsmodels.tsa.stattools import adfuller

from leadlag.core.errors import ConfigurationError, InsufficientDataError
from leadlag.stats.descriptive import as_array, summary_stats
from leadlag.stats.types import TestResult

logger = logging.getLogger(__name__)

AdfVariant = Literal["constant", "constant_and_trend"]
_ADF_REGRESSION = {"constant": "c", "constant_and_trend": "ct"}


def jarque_bera(x: Sequence[float] | np.ndarray) -> TestResult:
    """JB = n/6 (S^2 + (K-3)^2 / 4), chi-squared(2) upper tail."""
    arr = as_array(x, min_len=8)
    s = summary_stats(arr)
    statistic = arr.size / 6.0 * (s.skewness**2 + (s.kurtosis - 3.0) ** 2 / 4.0)
    p_value = float(sps.chi2.sf(statistic, df=2))
    return TestResult(statistic=float(statistic), p_value=min(1.0, max(0.0, p_value)), detail="chi2(2)")


def schwert_lags(n: int) -> int:
    return int(math.floor(12.0 * (n / 100.0) ** 0.25))


def adf_test(
    x: Sequence[float] | np.ndarray,
    variant: AdfVariant = "constant",
    lags: Union[Literal["auto"], int] = "auto",
) -> TestResult:
    """
    Regress dx_t on (1[, t], x_{t-1}, dx_{t-1..k}); the statistic is the
    t-ratio of x_{t-1}. lags="auto" uses k = floor(12 (n/100)^(1/4)).
    """
    if variant not in _ADF_REGRESSION:
        raise ConfigurationError(f"unknown ADF variant {variant!r}")
    arr = as_array(x, min_len=25)
    k = schwert_lags(arr.size) if lags == "auto" else int(lags)
    if k < 0:
        raise ConfigurationError(f"ADF lag order must be non-negative, got {k}")
    # k lagged differences, one lost difference, regressors (<= 3) + k
    if arr.size - k - 1 <= k + 3:
        raise InsufficientDataError(f"series of length {arr.size} too short for ADF with {k} lags")
    try:
        result = adfuller(arr, maxlag=k, regression=_ADF_REGRESSION[variant], autolag=None)
    except (ValueError, np.linalg.LinAlgError) as e:
        raise InsufficientDataError(f"ADF failed for lag order {k}: {e}") from e
    statistic, p_value = float(result[0]), float(result[1])
    logger.debug("adf variant=%s lags=%d stat=%.6g p=%.6g", variant, k, statistic, p_value)
    return TestResult(statistic=statistic, p_value=min(1.0, max(0.0, p_value)), detail=f"{variant}, lags={k}")
