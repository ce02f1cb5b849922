"""
Types for the rotated (t, x) lattice.

Coordinates: t1 indexes X, t2 indexes Y, t = t1 + t2, x = t2 - t1.
A positive lag x means X leads Y by x steps.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from datetime import date
from typing import Literal, Tuple

import numpy as np
import pandas as pd
from pydantic import BaseModel, Field

from leadlag.core.errors import ConfigurationError

Direction = Literal["forward", "backward"]
Member = Tuple[int, int]


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """values[t1, t2] = |X(t1) - Y(t2)|."""

    values: np.ndarray

    def __post_init__(self):
        v = self.values
        if v.ndim != 2 or v.shape[0] != v.shape[1]:
            raise ConfigurationError(f"distance matrix must be square, got shape {v.shape}")

    @property
    def n(self) -> int:
        return int(self.values.shape[0])

    def transpose(self) -> "DistanceMatrix":
        return DistanceMatrix(np.ascontiguousarray(self.values.T))


@dataclass(frozen=True, order=True)
class LatticeNode:
    t: int
    x: int

    @classmethod
    def at(cls, t1: int, t2: int) -> "LatticeNode":
        return cls(t=t1 + t2, x=t2 - t1)

    @property
    def t1(self) -> int:
        return (self.t - self.x) // 2

    @property
    def t2(self) -> int:
        return (self.t + self.x) // 2

    def check(self, n: int) -> None:
        if (self.t + self.x) % 2 != 0:
            raise ConfigurationError(f"node {self} violates parity t + x even")
        if not (0 <= self.t1 <= n - 1 and 0 <= self.t2 <= n - 1):
            raise ConfigurationError(f"node {self} maps to (t1={self.t1}, t2={self.t2}) outside [0, {n - 1}]")


@dataclass(frozen=True, eq=False)
class ThermalField:
    """
    Slice-normalized log weights of one propagation direction.

    Slice k covers rotated time t_values[k]; its nodes are t1 = t1_lo[k],
    t1_lo[k] + 1, ... with x = t - 2 t1. The true weight of a node is
    exp(log_weights[k][j] + slice_log_norm[k]).
    """

    temperature: float
    direction: Direction
    start: LatticeNode
    end: LatticeNode
    n: int
    t_values: np.ndarray
    t1_lo: np.ndarray
    log_weights: Tuple[np.ndarray, ...]
    slice_log_norm: np.ndarray
    x_mean: np.ndarray

    def slice_index(self, t: int) -> int:
        k = int(t) - int(self.t_values[0])
        if not 0 <= k < len(self.t_values):
            raise ConfigurationError(f"t={t} outside field range [{self.t_values[0]}, {self.t_values[-1]}]")
        return k

    def slice_probabilities(self, t: int) -> Tuple[np.ndarray, np.ndarray]:
        """(x, p) for the nodes of slice t, ordered by ascending t1 (descending x)."""
        k = self.slice_index(t)
        ell = self.log_weights[k]
        t1 = self.t1_lo[k] + np.arange(ell.size)
        return int(t) - 2 * t1, np.exp(ell)


class EnsembleConfig(BaseModel):
    margin: int = Field(default=30, ge=0, description="largest start offset i1, i2")
    temperature: float = Field(default=2.0, gt=0)
    tie_tolerance: float = Field(default=1e-12, gt=0)
    workers: int = Field(default=1, ge=1, description="processes used to evaluate members")

    def check_length(self, n: int) -> None:
        if not 2 * self.margin < n - 1:
            raise ConfigurationError(f"margin {self.margin} too large for series length {n} (need 2M < N - 1)")


@dataclass(frozen=True, eq=False)
class ThermalPath:
    t_values: np.ndarray
    x_values: np.ndarray
    free_energy_per_step: float
    member: Member
    temperature: float
    tied_members: Tuple[Member, ...] = ()

    def __len__(self) -> int:
        return int(self.t_values.size)


@dataclass(frozen=True, eq=False)
class EnsembleResult:
    path: ThermalPath
    free_energies: np.ndarray  # (M+1, M+1), indexed [i1, i2]
    tied_members: Tuple[Member, ...]

    def diagnostics_frame(self) -> pd.DataFrame:
        i1, i2 = np.indices(self.free_energies.shape)
        return pd.DataFrame(
            {
                "i1": i1.ravel(),
                "i2": i2.ravel(),
                "free_energy_per_step": self.free_energies.ravel(),
            }
        )


@dataclass(frozen=True, eq=False)
class LeadLagPath:
    """
    Thermal path on Y's trading calendar. lag_days is NaN where the member's
    lattice range does not reach a date; positive lag means X leads Y.
    """

    dates: Tuple[date, ...]
    lag_days: np.ndarray
    member: Member
    temperature: float
    free_energy_per_step: float = float("nan")
    significant: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=bool))

    def __post_init__(self):
        if len(self.lag_days) != len(self.dates):
            raise ConfigurationError("lag_days and dates differ in length")
        if self.significant.size == 0:
            object.__setattr__(self, "significant", np.zeros(len(self.dates), dtype=bool))

    @property
    def covered(self) -> np.ndarray:
        return ~np.isnan(self.lag_days)

    def with_significance(self, significant: np.ndarray) -> "LeadLagPath":
        return replace(self, significant=np.asarray(significant, dtype=bool))

    def to_frame(self) -> pd.DataFrame:
        mask = self.covered
        return pd.DataFrame(
            {
                "date": [d.isoformat() for d, keep in zip(self.dates, mask) if keep],
                "lag_days": self.lag_days[mask],
                "member_i1": self.member[0],
                "member_i2": self.member[1],
                "free_energy_per_step": self.free_energy_per_step,
            }
        )
