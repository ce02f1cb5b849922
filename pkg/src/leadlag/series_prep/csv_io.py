"""
CSV ingestion for spot and futures price files.

Schemas are fixed (no inference):
  spot:    date,close
  futures: date,contract,expiry,close,settle,volume

Row numbers in error messages count data rows from 1 (the header is row 0).
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import numpy as np
import pandas as pd

from leadlag.core.errors import InputDataError, ParseError
from leadlag.core.tables import write_table
from leadlag.series_prep.types import ContractQuote, PricePoint, PriceSeries, Schema

logger = logging.getLogger(__name__)

SPOT_COLUMNS: Tuple[str, ...] = ("date", "close")
FUTURES_COLUMNS: Tuple[str, ...] = ("date", "contract", "expiry", "close", "settle", "volume")
DATE_FORMAT = "%Y-%m-%d"


def parse_price_csv(path: str | Path, schema: Schema) -> Union[PriceSeries, List[ContractQuote]]:
    """
    Parse a spot file into a PriceSeries or a futures file into ContractQuotes.
    Rows are validated in file order, then sorted by date.
    """
    p = Path(path)
    if not p.exists():
        raise InputDataError(f"input file not found: {p}")

    expected = {"spot": SPOT_COLUMNS, "futures": FUTURES_COLUMNS}.get(schema)
    if expected is None:
        raise InputDataError(f"unknown schema {schema!r}; expected 'spot' or 'futures'")

    try:
        frame = pd.read_csv(p, dtype=str, keep_default_na=False, encoding="utf-8", skipinitialspace=True)
    except (pd.errors.EmptyDataError, pd.errors.ParserError, UnicodeDecodeError) as e:
        raise ParseError(f"unreadable CSV: {e}", path=str(p)) from e

    columns = tuple(c.strip() for c in frame.columns)
    missing = [c for c in expected if c not in columns]
    extra = [c for c in columns if c not in expected]
    if missing or extra:
        raise ParseError(
            f"header mismatch: expected {','.join(expected)}; missing={missing} unexpected={extra}",
            row=0,
            path=str(p),
        )
    frame.columns = list(columns)

    dates = _parse_dates(frame["date"], "date", p)
    if schema == "spot":
        return _build_spot(frame, dates, p)
    return _build_futures(frame, dates, p)


def export_spliced(series: PriceSeries, path: str | Path, *, config: Optional[Dict] = None) -> Path:
    """Write `date,price,active_contract,is_roll_day`."""
    frame = series.to_frame()
    if "active_contract" not in frame.columns:
        frame["active_contract"] = ""
        frame["is_roll_day"] = False
    return write_table(frame[["date", "price", "active_contract", "is_roll_day"]], path, config=config)


def _build_spot(frame: pd.DataFrame, dates: pd.Series, p: Path) -> PriceSeries:
    prices = _parse_positive(frame["close"], "price", p)
    dup = dates.duplicated(keep="first")
    if dup.any():
        i = int(np.flatnonzero(dup.to_numpy())[0])
        raise ParseError(f"duplicate date {dates.iloc[i].date()}", row=i + 1, path=str(p))

    order = np.argsort(dates.to_numpy(), kind="mergesort")
    points = tuple(PricePoint(date=dates.iloc[i].date(), price=float(prices.iloc[i])) for i in order)
    logger.debug("parsed spot file path=%s rows=%d", p, len(points))
    return PriceSeries(instrument=p.stem, points=points)


def _build_futures(frame: pd.DataFrame, dates: pd.Series, p: Path) -> List[ContractQuote]:
    expiries = _parse_dates(frame["expiry"], "expiry", p)
    close = _parse_positive(frame["close"], "close", p)
    settle = _parse_positive(frame["settle"], "settle", p)
    volume = pd.to_numeric(frame["volume"], errors="coerce")
    bad_volume = volume.isna() | (volume < 0) | (volume != np.floor(volume))
    if bad_volume.any():
        i = int(np.flatnonzero(bad_volume.to_numpy())[0])
        raise ParseError(f"malformed volume {frame['volume'].iloc[i]!r}", row=i + 1, path=str(p))

    contracts = frame["contract"].str.strip()
    empty = contracts == ""
    if empty.any():
        i = int(np.flatnonzero(empty.to_numpy())[0])
        raise ParseError("missing contract label", row=i + 1, path=str(p))

    expired = expiries < dates
    if expired.any():
        i = int(np.flatnonzero(expired.to_numpy())[0])
        raise ParseError(f"contract {contracts.iloc[i]} quoted after its expiry", row=i + 1, path=str(p))

    keys = pd.DataFrame({"date": dates, "contract": contracts})
    dup = keys.duplicated(keep="first")
    if dup.any():
        i = int(np.flatnonzero(dup.to_numpy())[0])
        raise ParseError(
            f"duplicate quote for contract {contracts.iloc[i]} on {dates.iloc[i].date()}", row=i + 1, path=str(p)
        )

    order = np.argsort(dates.to_numpy(), kind="mergesort")
    quotes = [
        ContractQuote(
            date=dates.iloc[i].date(),
            contract_id=str(contracts.iloc[i]),
            expiry=expiries.iloc[i].date(),
            close=float(close.iloc[i]),
            settle=float(settle.iloc[i]),
            volume=int(volume.iloc[i]),
        )
        for i in order
    ]
    logger.debug("parsed futures file path=%s rows=%d contracts=%d", p, len(quotes), contracts.nunique())
    return quotes


def _parse_dates(raw: pd.Series, column: str, p: Path) -> pd.Series:
    parsed = pd.to_datetime(raw.str.strip(), format=DATE_FORMAT, errors="coerce")
    bad = parsed.isna()
    if bad.any():
        i = int(np.flatnonzero(bad.to_numpy())[0])
        raise ParseError(f"malformed {column} {raw.iloc[i]!r}", row=i + 1, path=str(p))
    return parsed


def _parse_positive(raw: pd.Series, label: str, p: Path) -> pd.Series:
    values = pd.to_numeric(raw.str.strip(), errors="coerce")
    bad = pd.Series(~np.isfinite(values.to_numpy(dtype=float, na_value=np.nan)), index=values.index)
    if bad.any():
        i = int(np.flatnonzero(bad.to_numpy())[0])
        raise ParseError(f"malformed {label} {raw.iloc[i]!r}", row=i + 1, path=str(p))
    nonpositive = values <= 0
    if nonpositive.any():
        i = int(np.flatnonzero(nonpositive.to_numpy())[0])
        raise ParseError(f"non-positive {label}", row=i + 1, path=str(p))
    return values
