"""
Continuous futures series from a panel of contract quotes.

Roll rule: track the nearest-term contract; on the first day the next
contract by expiry trades more volume than the tracked one, switch to it
that same day. A contract that stops trading before the sample ends is
rolled on its last quoted day even without a volume crossover. If the
tracked contract misses a day while a later contract is quoted, the series
rolls to that contract on that day. Rolls are permanent: a later volume
reversal never switches back.

No back-adjustment: the spliced price is the raw price of the active contract.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from datetime import date
from typing import Dict, List, Optional, Sequence, Tuple

import pandas as pd

from leadlag.core.errors import (
    ConfigurationError,
    InputDataError,
    InsufficientDataError,
    LengthMismatchError,
    SpliceGapError,
)
from leadlag.series_prep.types import ContractQuote, PriceField, PricePoint, PriceSeries

logger = logging.getLogger(__name__)

# instrument names of the two spliced series
FUTURES_SERIES: Dict[str, str] = {"close": "VXFC", "settle": "VXFS"}


def splice_continuous_futures(
    quotes: Sequence[ContractQuote],
    price_field: PriceField,
    *,
    instrument: str = "futures",
) -> PriceSeries:
    if price_field not in ("close", "settle"):
        raise InputDataError(f"price_field must be 'close' or 'settle', got {price_field!r}")
    if not quotes:
        raise InsufficientDataError("no futures quotes to splice")

    expiry_of = _contract_expiries(quotes)
    by_day: Dict[date, Dict[str, ContractQuote]] = defaultdict(dict)
    last_quote_day: Dict[str, date] = {}
    for q in quotes:
        by_day[q.date][q.contract_id] = q
        if q.contract_id not in last_quote_day or q.date > last_quote_day[q.contract_id]:
            last_quote_day[q.contract_id] = q.date

    days = sorted(by_day)
    final_day = days[-1]
    current: Optional[str] = None
    points: List[PricePoint] = []
    active: List[str] = []
    roll_dates: List[date] = []
    forced = 0
    gap_rolls = 0

    for d in days:
        alive = sorted((q for q in by_day[d].values() if q.expiry >= d), key=lambda q: q.expiry)
        if not alive:
            raise SpliceGapError(f"no unexpired contract quoted on {d}")

        if current is None:
            current = alive[0].contract_id
        elif current not in by_day[d]:
            replacement = _next_contract(alive, expiry_of[current])
            if replacement is None:
                raise SpliceGapError(f"active contract {current} has no quote on {d} and no later contract is quoted")
            logger.warning("active contract %s has no quote on %s, rolling to %s", current, d, replacement.contract_id)
            current = replacement.contract_id
            gap_rolls += 1

        successor = _next_contract(alive, expiry_of[current])
        if d == last_quote_day[current] and d != final_day:
            if successor is None:
                raise SpliceGapError(f"contract {current} stops trading on {d} with no later contract to roll into")
            logger.debug("forced roll %s -> %s on %s (last trading day)", current, successor.contract_id, d)
            current = successor.contract_id
            forced += 1
        elif successor is not None and successor.volume > by_day[d][current].volume:
            logger.debug(
                "volume roll %s -> %s on %s (%d > %d)",
                current,
                successor.contract_id,
                d,
                successor.volume,
                by_day[d][current].volume,
            )
            current = successor.contract_id

        if active and active[-1] != current:
            roll_dates.append(d)
        active.append(current)
        points.append(PricePoint(date=d, price=by_day[d][current].price(price_field)))

    logger.info(
        "spliced %s days=%d rolls=%d forced=%d gap=%d field=%s",
        instrument,
        len(points),
        len(roll_dates),
        forced,
        gap_rolls,
        price_field,
    )
    return PriceSeries(
        instrument=instrument,
        points=tuple(points),
        roll_dates=tuple(roll_dates),
        active_contracts=tuple(active),
    )


def align_common_dates(a: PriceSeries, b: PriceSeries) -> Tuple[PriceSeries, PriceSeries]:
    """Restrict both series to the trading days they share."""
    common = set(a.dates) & set(b.dates)
    dropped_a = len(a) - len(common)
    dropped_b = len(b) - len(common)
    if dropped_a or dropped_b:
        logger.info(
            "calendar alignment dropped %d day(s) only in %s and %d day(s) only in %s",
            dropped_a,
            a.instrument,
            dropped_b,
            b.instrument,
        )
    if len(common) < 2:
        raise InsufficientDataError(f"{a.instrument} and {b.instrument} share fewer than 2 trading days")
    return a.restrict(common), b.restrict(common)


def _contract_expiries(quotes: Sequence[ContractQuote]) -> Dict[str, date]:
    expiry_of: Dict[str, date] = {}
    for q in quotes:
        known = expiry_of.setdefault(q.contract_id, q.expiry)
        if known != q.expiry:
            raise ConfigurationError(f"contract {q.contract_id} has inconsistent expiries {known} and {q.expiry}")
    owners: Dict[date, str] = {}
    for contract, expiry in expiry_of.items():
        if expiry in owners:
            raise ConfigurationError(f"contracts {owners[expiry]} and {contract} share expiry {expiry}")
        owners[expiry] = contract
    return expiry_of


def _next_contract(alive: Sequence[ContractQuote], after: date) -> Optional[ContractQuote]:
    for q in alive:
        if q.expiry > after:
            return q
    return None


def spot_futures_basis(futures: PriceSeries, spot: PriceSeries) -> pd.DataFrame:
    """Futures minus spot on each shared day, with the contract behind the futures price."""
    if futures.dates != spot.dates:
        raise LengthMismatchError(f"{futures.instrument} and {spot.instrument} are not on the same trading days")
    frame = pd.DataFrame(
        {
            "date": [d.isoformat() for d in spot.dates],
            "spot": spot.prices,
            "futures": futures.prices,
        }
    )
    frame["basis"] = frame["futures"] - frame["spot"]
    if futures.active_contracts:
        frame["active_contract"] = list(futures.active_contracts)
    return frame
