from __future__ import annotations

from datetime import date
from typing import Sequence

import numpy as np

from leadlag.core.errors import ComputationError
from leadlag.tops.types import LeadLagPath, ThermalPath


def to_calendar_lags(path: ThermalPath, dates: Sequence[date]) -> LeadLagPath:
    """
    Sample <x> at rotated time t = 2*tau for each calendar index tau of Y,
    interpolating linearly between computed t values. Dates outside the
    path's t-range get NaN.
    """
    if len(path) == 0:
        raise ComputationError("cannot map an empty thermal path to the calendar")
    t_grid = 2.0 * np.arange(len(dates))
    t_values = path.t_values.astype(float)
    covered = (t_grid >= t_values[0]) & (t_grid <= t_values[-1])
    lag = np.full(len(dates), np.nan)
    lag[covered] = np.interp(t_grid[covered], t_values, path.x_values)
    return LeadLagPath(
        dates=tuple(dates),
        lag_days=lag,
        member=path.member,
        temperature=path.temperature,
        free_energy_per_step=path.free_energy_per_step,
    )
