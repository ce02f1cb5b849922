"""
Transfer-matrix recursion for the thermal weights.

Forward weights obey

    W(t, x) = [W(t-1, x-1) + W(t-1, x+1) + W(t-2, x)] * exp(-eps(t, x) / T)

starting from W(start) = exp(-eps(start) / T). Each slice is stored as log
weights normalized to sum 1 plus the accumulated log normalizer, so nothing
under- or overflows at N in the thousands.

Backward weights are the same recursion run from `end` toward `start`; it is
computed as the forward sweep over both series reversed and mapped back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

import numpy as np
from scipy.special import logsumexp

from leadlag.core.errors import ConfigurationError, FieldMismatchError
from leadlag.tops.lattice import Box, shifted
from leadlag.tops.types import Direction, DistanceMatrix, LatticeNode, ThermalField, ThermalPath


@dataclass
class Sweep:
    """Per-slice results of one propagation, in propagation order."""

    t_values: np.ndarray
    t1_lo: np.ndarray
    x_mean: np.ndarray
    log_norm: np.ndarray
    log_weights: Optional[List[np.ndarray]]


def forward_sweep(eps: np.ndarray, box: Box, temperature: float, *, keep_weights: bool = False) -> Sweep:
    ts, te = box.t_start, box.t_end
    size = te - ts + 1
    t_values = np.arange(ts, te + 1)
    t1_lo = np.empty(size, dtype=np.int64)
    x_mean = np.empty(size, dtype=float)
    log_norm = np.empty(size, dtype=float)
    kept: Optional[List[np.ndarray]] = [] if keep_weights else None

    prev1 = prev2 = np.empty(0)
    lo1 = lo2 = 0
    c1 = c2 = 0.0
    for k, t in enumerate(range(ts, te + 1)):
        lo, hi = box.t1_range(t)
        t1 = np.arange(lo, hi + 1)
        local = eps[t1, t - t1] / temperature
        if k == 0:
            u = -local
            ref = 0.0
        else:
            u = np.logaddexp(shifted(prev1, lo1, t1 - 1, -np.inf), shifted(prev1, lo1, t1, -np.inf))
            if k >= 2:
                u = np.logaddexp(u, shifted(prev2, lo2, t1 - 1, -np.inf) + (c2 - c1))
            u -= local
            ref = c1
        z = float(logsumexp(u))
        ell = u - z
        c = ref + z

        t1_lo[k] = lo
        log_norm[k] = c
        x_mean[k] = float(np.exp(ell) @ (t - 2 * t1))
        if kept is not None:
            kept.append(ell)

        prev2, lo2, c2 = prev1, lo1, c1
        prev1, lo1, c1 = ell, lo, c

    return Sweep(t_values=t_values, t1_lo=t1_lo, x_mean=x_mean, log_norm=log_norm, log_weights=kept)


def backward_sweep(eps: np.ndarray, box: Box, temperature: float, *, keep_weights: bool = False) -> Sweep:
    """Backward recursion, returned in ascending-t order like forward_sweep."""
    n = eps.shape[0]
    rev = forward_sweep(eps[::-1, ::-1], box.mirrored(n), temperature, keep_weights=keep_weights)
    span = 2 * (n - 1)
    t_values = span - rev.t_values[::-1]
    # reversed slice t' holds t1' = n-1-t1 ascending, i.e. t1 descending
    if rev.log_weights is not None:
        widths = np.array([w.size for w in rev.log_weights], dtype=np.int64)
    else:
        widths = _slice_widths(box, t_values)[::-1]
    t1_lo = (n - 1) - (rev.t1_lo + widths - 1)
    weights = [w[::-1] for w in reversed(rev.log_weights)] if rev.log_weights is not None else None
    return Sweep(
        t_values=t_values,
        t1_lo=t1_lo[::-1],
        x_mean=-rev.x_mean[::-1],
        log_norm=rev.log_norm[::-1],
        log_weights=weights,
    )


def thermal_weights(
    d: DistanceMatrix,
    temperature: float,
    start: LatticeNode,
    end: LatticeNode,
    direction: Direction,
) -> ThermalField:
    if not temperature > 0:
        raise ConfigurationError(f"temperature must be positive, got {temperature}")
    if direction not in ("forward", "backward"):
        raise ConfigurationError(f"direction must be 'forward' or 'backward', got {direction!r}")
    box = Box.between(start, end, d.n)
    sweep_fn = forward_sweep if direction == "forward" else backward_sweep
    sweep = sweep_fn(d.values, box, temperature, keep_weights=True)
    return ThermalField(
        temperature=float(temperature),
        direction=direction,
        start=start,
        end=end,
        n=d.n,
        t_values=sweep.t_values,
        t1_lo=sweep.t1_lo,
        log_weights=tuple(sweep.log_weights or ()),
        slice_log_norm=sweep.log_norm,
        x_mean=sweep.x_mean,
    )


def thermal_average_path(fwd: ThermalField, bwd: ThermalField) -> ThermalPath:
    """<x(t)> = sum_x x [W_fwd(t,x)/W_fwd(t) + W_bwd(t,x)/W_bwd(t)] / 2."""
    if fwd.direction != "forward" or bwd.direction != "backward":
        raise FieldMismatchError("expected one forward and one backward field")
    if (fwd.temperature, fwd.start, fwd.end, fwd.n) != (bwd.temperature, bwd.start, bwd.end, bwd.n):
        raise FieldMismatchError("forward and backward fields disagree on temperature, start, end or size")
    return ThermalPath(
        t_values=fwd.t_values.copy(),
        x_values=(fwd.x_mean + bwd.x_mean) / 2.0,
        free_energy_per_step=free_energy(fwd),
        member=(fwd.start.t1, fwd.start.t2),
        temperature=fwd.temperature,
    )


def free_energy(field: ThermalField) -> float:
    """Per-step free energy -T ln Z / L, Z the total weight at the terminal node."""
    k = -1 if field.direction == "forward" else 0
    log_z = float(field.log_weights[k][0] + field.slice_log_norm[k])
    return per_step_free_energy(log_z, field.temperature, field.end.t - field.start.t)


def per_step_free_energy(log_z: float, temperature: float, steps: int) -> float:
    return -temperature * log_z / steps


def _slice_widths(box: Box, t_values: np.ndarray) -> np.ndarray:
    widths = np.empty(t_values.size, dtype=np.int64)
    for k, t in enumerate(t_values):
        lo, hi = box.t1_range(int(t))
        widths[k] = hi - lo + 1
    return widths
