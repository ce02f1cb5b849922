from __future__ import annotations

import numpy as np

from leadlag.core.errors import InsufficientDataError, LengthMismatchError
from leadlag.series_prep.types import ReturnSeries
from leadlag.tops.types import DistanceMatrix


def distance_matrix(x: ReturnSeries | np.ndarray, y: ReturnSeries | np.ndarray) -> DistanceMatrix:
    """Entry (t1, t2) = |X(t1) - Y(t2)|."""
    xv = np.asarray(getattr(x, "values", x), dtype=float)
    yv = np.asarray(getattr(y, "values", y), dtype=float)
    if xv.shape != yv.shape:
        raise LengthMismatchError(f"series lengths differ: {xv.size} vs {yv.size}")
    if xv.size < 2:
        raise InsufficientDataError("distance matrix needs series of length >= 2")
    return DistanceMatrix(np.abs(xv[:, None] - yv[None, :]))


def local_minimal_mapping(d: DistanceMatrix) -> np.ndarray:
    """
    phi(t1) = argmin over t2 of eps(t1, t2), smallest t2 on ties.
    Diagnostic only: jumps freely and is not used by the thermal path.
    """
    return np.argmin(d.values, axis=1)
