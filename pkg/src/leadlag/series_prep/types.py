from __future__ import annotations

import math
from dataclasses import dataclass
from datetime import date
from typing import Iterable, Literal, Sequence, Tuple

import numpy as np
import pandas as pd

from leadlag.core.errors import InputDataError

PriceField = Literal["close", "settle"]
Schema = Literal["spot", "futures"]


@dataclass(frozen=True)
class PricePoint:
    date: date
    price: float

    def __post_init__(self):
        if not (math.isfinite(self.price) and self.price > 0):
            raise InputDataError(f"non-positive price {self.price} on {self.date}")


@dataclass(frozen=True)
class ContractQuote:
    """One futures contract's quote on one trading day."""

    date: date
    contract_id: str
    expiry: date
    close: float
    settle: float
    volume: int

    def __post_init__(self):
        if self.expiry < self.date:
            raise InputDataError(f"contract {self.contract_id} quoted on {self.date} after expiry {self.expiry}")
        for name in ("close", "settle"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise InputDataError(f"non-positive {name} {value} for {self.contract_id} on {self.date}")
        if self.volume < 0:
            raise InputDataError(f"negative volume for {self.contract_id} on {self.date}")

    def price(self, price_field: PriceField) -> float:
        return self.close if price_field == "close" else self.settle


@dataclass(frozen=True)
class PriceSeries:
    """
    Date-ordered prices for one instrument.

    For a spliced futures series `active_contracts[i]` names the contract whose
    price is `points[i]`, and `roll_dates` lists the days the active contract
    changed. Both are empty for spot series.
    """

    instrument: str
    points: Tuple[PricePoint, ...]
    roll_dates: Tuple[date, ...] = ()
    active_contracts: Tuple[str, ...] = ()

    def __post_init__(self):
        dates = [p.date for p in self.points]
        for prev, cur in zip(dates, dates[1:]):
            if cur <= prev:
                raise InputDataError(f"{self.instrument}: dates not strictly increasing at {cur}")
        if self.active_contracts and len(self.active_contracts) != len(self.points):
            raise InputDataError(f"{self.instrument}: active_contracts length does not match points")

    def __len__(self) -> int:
        return len(self.points)

    @property
    def dates(self) -> Tuple[date, ...]:
        return tuple(p.date for p in self.points)

    @property
    def prices(self) -> np.ndarray:
        return np.fromiter((p.price for p in self.points), dtype=float, count=len(self.points))

    def restrict(self, keep: Iterable[date]) -> "PriceSeries":
        """Subset to the given dates, keeping roll days and active contracts that survive."""
        wanted = set(keep)
        idx = [i for i, p in enumerate(self.points) if p.date in wanted]
        return PriceSeries(
            instrument=self.instrument,
            points=tuple(self.points[i] for i in idx),
            roll_dates=tuple(d for d in self.roll_dates if d in wanted),
            active_contracts=tuple(self.active_contracts[i] for i in idx) if self.active_contracts else (),
        )

    def to_frame(self) -> pd.DataFrame:
        rolls = set(self.roll_dates)
        frame = pd.DataFrame(
            {
                "date": [p.date.isoformat() for p in self.points],
                "price": self.prices,
            }
        )
        if self.active_contracts:
            frame["active_contract"] = list(self.active_contracts)
            frame["is_roll_day"] = [p.date in rolls for p in self.points]
        return frame


@dataclass(frozen=True, eq=False)
class ReturnSeries:
    """
    Log returns aligned to the later of each price pair.

    mean / std are r-bar and sigma (sample, n-1) of the raw returns. A
    standardized series keeps them so R(t) can be mapped back to r(t).
    """

    values: np.ndarray
    dates: Tuple[date, ...]
    mean: float
    std: float
    standardized: bool = False
    instrument: str = ""

    def __post_init__(self):
        if len(self.values) != len(self.dates):
            raise InputDataError("return values and dates differ in length")

    def __len__(self) -> int:
        return int(self.values.shape[0])


def as_dates(values: Sequence) -> Tuple[date, ...]:
    """Normalize Timestamps / ISO strings / dates to a tuple of datetime.date."""
    return tuple(pd.Timestamp(v).date() for v in values)


__all__ = [
    "ContractQuote",
    "PriceField",
    "PricePoint",
    "PriceSeries",
    "ReturnSeries",
    "Schema",
    "as_dates",
]
