from __future__ import annotations

from typing import Sequence

import numpy as np
from scipy import stats as sps

from leadlag.core.errors import DegenerateSeriesError, InsufficientDataError, LengthMismatchError
from leadlag.stats.types import SummaryStats


def as_array(x: Sequence[float] | np.ndarray, *, min_len: int, name: str = "series") -> np.ndarray:
    arr = np.asarray(x, dtype=float).ravel()
    if arr.size < min_len:
        raise InsufficientDataError(f"{name}: need at least {min_len} observations, got {arr.size}")
    if not np.all(np.isfinite(arr)):
        raise InsufficientDataError(f"{name}: contains non-finite values")
    return arr


def summary_stats(x: Sequence[float] | np.ndarray) -> SummaryStats:
    """
    Sample std (n-1). Skewness m3/m2^1.5 and raw kurtosis m4/m2^2 use
    central moments with denominator n.
    """
    arr = as_array(x, min_len=2)
    if np.ptp(arr) == 0:
        raise DegenerateSeriesError("zero variance: skewness and kurtosis undefined")
    return SummaryStats(
        mean=float(arr.mean()),
        maximum=float(arr.max()),
        minimum=float(arr.min()),
        std_dev=float(arr.std(ddof=1)),
        skewness=float(sps.skew(arr, bias=True)),
        kurtosis=float(sps.kurtosis(arr, fisher=False, bias=True)),
        n=int(arr.size),
    )


def pearson_correlation(x: Sequence[float] | np.ndarray, y: Sequence[float] | np.ndarray) -> float:
    a = as_array(x, min_len=2, name="x")
    b = as_array(y, min_len=2, name="y")
    if a.size != b.size:
        raise LengthMismatchError(f"correlation inputs differ in length: {a.size} vs {b.size}")
    if np.ptp(a) == 0 or np.ptp(b) == 0:
        raise DegenerateSeriesError("correlation undefined for a constant series")
    return float(np.clip(sps.pearsonr(a, b)[0], -1.0, 1.0))
