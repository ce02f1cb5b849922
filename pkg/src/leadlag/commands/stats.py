"""
stats: summary report of daily log returns for the spot index (VIX) and the
close (VXFC) and settle (VXFS) spliced futures series.

Panel A: moments, Jarque-Bera and both ADF variants per series.
Panel B: Pearson correlation matrix.
"""

from __future__ import annotations

import argparse
import logging
import math
from typing import Any, Dict, List

import numpy as np
import pandas as pd

from leadlag.commands.outputs import OutputWriter
from leadlag.commands.run_config import RunConfig
from leadlag.core.config import get_settings
from leadlag.core.errors import InsufficientDataError
from leadlag.series_prep.csv_io import parse_price_csv
from leadlag.series_prep.returns import log_returns
from leadlag.series_prep.splicing import FUTURES_SERIES, align_common_dates, splice_continuous_futures
from leadlag.stats.descriptive import pearson_correlation, summary_stats
from leadlag.stats.hypothesis import adf_test, jarque_bera
from leadlag.stats.types import TestResult

logger = logging.getLogger(__name__)

SERIES = ("VIX", FUTURES_SERIES["close"], FUTURES_SERIES["settle"])


def load_return_panel(config: RunConfig) -> Dict[str, np.ndarray]:
    spot = parse_price_csv(config.vix, "spot")
    quotes = parse_price_csv(config.futures, "futures")
    close = splice_continuous_futures(quotes, "close", instrument=FUTURES_SERIES["close"])
    settle = splice_continuous_futures(quotes, "settle", instrument=FUTURES_SERIES["settle"])
    close, spot = align_common_dates(close, spot)
    settle = settle.restrict(spot.dates)
    logger.info("stats sample: %d prices, %d returns", len(spot), len(spot) - 1)
    return {
        "VIX": log_returns(spot).values,
        close.instrument: log_returns(close).values,
        settle.instrument: log_returns(settle).values,
    }


def panel_a(returns: Dict[str, np.ndarray]) -> pd.DataFrame:
    rows: List[Dict[str, Any]] = []
    for name in SERIES:
        r = returns[name]
        s = summary_stats(r)
        jb = jarque_bera(r)
        adf_c = _adf_or_nan(r, "constant", name)
        adf_ct = _adf_or_nan(r, "constant_and_trend", name)
        rows.append(
            {
                "series": name,
                **s.to_dict(),
                "jb_stat": jb.statistic,
                "jb_p_value": jb.p_value,
                "adf_c_stat": adf_c.statistic,
                "adf_c_p_value": adf_c.p_value,
                "adf_ct_stat": adf_ct.statistic,
                "adf_ct_p_value": adf_ct.p_value,
            }
        )
    return pd.DataFrame(rows)


def panel_b(returns: Dict[str, np.ndarray]) -> pd.DataFrame:
    matrix = {
        a: [1.0 if a == b else pearson_correlation(returns[a], returns[b]) for b in SERIES] for a in SERIES
    }
    frame = pd.DataFrame(matrix, index=list(SERIES)).T
    frame.insert(0, "series", list(SERIES))
    return frame.reset_index(drop=True)


def cmd_stats(config: RunConfig) -> int:
    config.require("vix", "futures")
    with OutputWriter(config.out, config.header("stats")) as out:
        returns = load_return_panel(config)
        a, b = panel_a(returns), panel_b(returns)
        out.table("stats_panel_a.csv", a)
        out.table("stats_panel_b.csv", b)
        out.json(
            "stats.json",
            {
                "panel_a": _records(a),
                "panel_b": {row["series"]: {k: row[k] for k in SERIES} for row in _records(b)},
            },
        )
    for row in a.itertuples(index=False):
        print(f"{row.series}: n={row.n} mean={row.mean:.6g} std={row.std_dev:.6g}")
    print(f"outputs written to {config.out}")
    return 0


def handle(args: argparse.Namespace) -> int:
    return cmd_stats(RunConfig.from_args(args, get_settings()))


def _adf_or_nan(r: np.ndarray, variant: str, name: str) -> TestResult:
    try:
        return adf_test(r, variant)
    except InsufficientDataError as e:
        logger.warning("%s: ADF %s skipped: %s", name, variant, e)
        return TestResult(statistic=math.nan, p_value=math.nan, detail="skipped")


def _records(frame: pd.DataFrame) -> List[Dict[str, Any]]:
    """JSON-safe rows: NaN becomes null."""
    clean = frame.astype(object).where(frame.notna(), None)
    return clean.to_dict(orient="records")
