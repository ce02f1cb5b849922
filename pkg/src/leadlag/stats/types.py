from __future__ import annotations

from dataclasses import asdict, dataclass, field
from typing import Any, Dict

import numpy as np


@dataclass(frozen=True)
class SummaryStats:
    """Kurtosis is raw (normal = 3), not excess."""

    mean: float
    maximum: float
    minimum: float
    std_dev: float
    skewness: float
    kurtosis: float
    n: int

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


@dataclass(frozen=True)
class TestResult:
    statistic: float
    p_value: float
    detail: str = ""

    __test__ = False  # not a pytest class


@dataclass(frozen=True, eq=False)
class RegressionResult:
    """y = intercept + slope * x + residual."""

    intercept: float
    slope: float
    slope_std_err: float
    t_stat: float
    p_value: float
    n_obs: int
    residuals: np.ndarray = field(repr=False)
