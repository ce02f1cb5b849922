from __future__ import annotations

from typing import Sequence

import numpy as np
import pandas as pd
import statsmodels.api as sm
from scipy import stats as sps
from statsmodels.regression.rolling import RollingOLS

from leadlag.core.errors import DegenerateSeriesError, LengthMismatchError
from leadlag.stats.descriptive import as_array
from leadlag.stats.types import RegressionResult


def ols_fit(y: Sequence[float] | np.ndarray, x: Sequence[float] | np.ndarray) -> RegressionResult:
    """
    y = c + a x + e by least squares. Slope standard error from the n-2
    residual variance; two-sided p from Student t with n-2 dof.
    """
    yv = as_array(y, min_len=3, name="y")
    xv = as_array(x, min_len=3, name="x")
    if yv.size != xv.size:
        raise LengthMismatchError(f"regression inputs differ in length: {yv.size} vs {xv.size}")
    if np.ptp(xv) == 0:
        raise DegenerateSeriesError("singular design: regressor is constant")

    fit = sm.OLS(yv, sm.add_constant(xv, has_constant="add")).fit()
    intercept, slope = (float(v) for v in fit.params)
    se = float(fit.bse[1])
    t_stat, p_value = _slope_test(slope, se, yv.size - 2)
    return RegressionResult(
        intercept=intercept,
        slope=slope,
        slope_std_err=se,
        t_stat=t_stat,
        p_value=p_value,
        n_obs=int(yv.size),
        residuals=np.asarray(fit.resid, dtype=float),
    )


ROLLING_COLUMNS = ["end", "intercept", "slope", "slope_std_err", "t_stat", "p_value"]


def rolling_ols(y: np.ndarray, x: np.ndarray, window: int) -> pd.DataFrame:
    """
    Trailing-window simple regressions, one row per window end (index
    window-1 .. n-1). Same estimates as ols_fit on each window; windows
    with a constant regressor get NaN.
    """
    yv = np.asarray(y, dtype=float)
    xv = np.asarray(x, dtype=float)
    if yv.size != xv.size:
        raise LengthMismatchError(f"regression inputs differ in length: {yv.size} vs {xv.size}")
    if yv.size < window:
        return pd.DataFrame(columns=ROLLING_COLUMNS)

    exog = sm.add_constant(xv, has_constant="add")
    # pinv keeps constant-regressor windows finite; they are masked below
    fit = RollingOLS(yv, exog, window=window).fit(method="pinv")
    params = np.asarray(fit.params, dtype=float)[window - 1 :]
    bse = np.asarray(fit.bse, dtype=float)[window - 1 :]

    xs = pd.Series(xv)
    spread = (xs.rolling(window).max() - xs.rolling(window).min()).to_numpy()[window - 1 :]
    degenerate = spread == 0

    tests = np.array([_slope_test(a, se, window - 2) for a, se in zip(params[:, 1], bse[:, 1])]).reshape(-1, 2)
    frame = pd.DataFrame(
        {
            "end": np.arange(window - 1, yv.size),
            "intercept": params[:, 0],
            "slope": params[:, 1],
            "slope_std_err": bse[:, 1],
            "t_stat": tests[:, 0],
            "p_value": tests[:, 1],
        }
    )
    frame.loc[degenerate, ROLLING_COLUMNS[1:]] = np.nan
    return frame


def _slope_test(slope: float, se: float, dof: int) -> tuple[float, float]:
    if se == 0.0 or not np.isfinite(se):
        # exact fit
        return (float(np.copysign(np.inf, slope)) if slope != 0 else 0.0), (0.0 if slope != 0 else 1.0)
    t_stat = slope / se
    return float(t_stat), float(2.0 * sps.t.sf(abs(t_stat), dof))
