"""
analyze: spot + futures files -> spliced series, returns, TOPS lead-lag path,
ensemble diagnostics, self-consistency reports and phase statistics.

X is the spliced futures return series and Y the spot index, so a
negative lag means the spot index leads the futures.

With --price-field both the close and settle splices are analysed in turn
and each writes its own output set under a subdirectory named after the
price field.
"""

from __future__ import annotations

import argparse
import logging
from typing import List, Sequence

import numpy as np
import pandas as pd

from leadlag.commands.outputs import OutputWriter
from leadlag.commands.phases import phase_summary
from leadlag.commands.run_config import RunConfig
from leadlag.core.config import get_settings
from leadlag.core.logger import log_step
from leadlag.selfconsistent.rolling import (
    SWEEP_WINDOWS,
    lagged_alignment,
    mark_significance,
    rolling_self_consistent_test,
    window_sweep,
)
from leadlag.series_prep.csv_io import parse_price_csv
from leadlag.series_prep.returns import log_returns, standardize
from leadlag.series_prep.splicing import (
    FUTURES_SERIES,
    align_common_dates,
    splice_continuous_futures,
    spot_futures_basis,
)
from leadlag.series_prep.types import ContractQuote, PriceField, PriceSeries, ReturnSeries
from leadlag.tops.calendar import to_calendar_lags
from leadlag.tops.distance import distance_matrix
from leadlag.tops.ensemble import run_ensemble, temperature_scan
from leadlag.tops.types import DistanceMatrix

logger = logging.getLogger(__name__)

TEMPERATURE_SUMMARY_COLUMNS = [
    "temperature",
    "member_i1",
    "member_i2",
    "free_energy_per_step",
    "mean_lag",
    "median_lag",
    "frac_negative",
]


def cmd_analyze(config: RunConfig) -> int:
    config.require("vix", "futures")
    header = config.header("analyze")
    fields = config.price_fields()

    summaries = {}
    with OutputWriter(config.out, header) as out:
        with log_step(logger, "ingest"):
            spot = parse_price_csv(config.vix, "spot")
            quotes = parse_price_csv(config.futures, "futures")
        for field in fields:
            prefix = f"{field}/" if len(fields) > 1 else ""
            with log_step(logger, f"analyze {FUTURES_SERIES[field]}"):
                summaries[field] = analyze_series(out, prefix, spot, quotes, field, config)

    for field, summary in summaries.items():
        label = f"{FUTURES_SERIES[field]} " if len(fields) > 1 else ""
        for row in summary.itertuples(index=False):
            print(
                f"{label}phase {row.phase}: n={row.n} frac_negative={row.frac_negative:.4f} "
                f"mean_lag={row.mean_lag:.4f}"
            )
    print(f"outputs written to {config.out}")
    return 0


def analyze_series(
    out: OutputWriter,
    prefix: str,
    spot: PriceSeries,
    quotes: Sequence[ContractQuote],
    field: PriceField,
    config: RunConfig,
) -> pd.DataFrame:
    """Run the pipeline for one spliced futures series; returns the phase summary."""
    futures = splice_continuous_futures(quotes, field, instrument=FUTURES_SERIES[field])
    futures, spot = align_common_dates(futures, spot)
    out.spliced(f"{prefix}spliced_futures.csv", futures)
    out.table(f"{prefix}basis.csv", spot_futures_basis(futures, spot))

    raw_x, raw_y = log_returns(futures), log_returns(spot)
    x, y = standardize(raw_x), standardize(raw_y)
    out.table(f"{prefix}returns.csv", _returns_frame(raw_x, x, raw_y, y))

    d = distance_matrix(x, y)
    result = run_ensemble(d, config.ensemble())
    out.table(f"{prefix}ensemble_diagnostics.csv", result.diagnostics_frame())
    path = to_calendar_lags(result.path, y.dates)

    if config.temperatures:
        scan, scan_summary = _temperature_scan_frames(d, config, y)
        out.table(f"{prefix}temperature_scan.csv", scan)
        out.table(f"{prefix}temperature_summary.csv", scan_summary)

    with log_step(logger, "self-consistency"):
        pairs = lagged_alignment(x, y, path)
        report = rolling_self_consistent_test(pairs, config.window, config.alpha)
        out.table(f"{prefix}self_consistency_w{config.window}.csv", report.to_frame())
        sweep = None
        if config.sweep_windows:
            sweep = window_sweep(pairs, SWEEP_WINDOWS, config.alpha)
            out.table(f"{prefix}self_consistency_sweep.csv", sweep.records_frame())
            out.table(f"{prefix}significance_mask.csv", sweep.mask_frame())
        path = mark_significance(path, report, sweep)

    frame = path.to_frame()
    frame["significant"] = path.significant[path.covered]
    out.table(f"{prefix}lead_lag_path.csv", frame)

    histograms, summary = phase_summary(path, config.phase_breaks, config.histogram_bin_width)
    out.table(f"{prefix}phase_histograms.csv", histograms)
    out.table(f"{prefix}phase_summary.csv", summary)
    return summary


def handle(args: argparse.Namespace) -> int:
    return cmd_analyze(RunConfig.from_args(args, get_settings()))


def _temperature_scan_frames(
    d: DistanceMatrix, config: RunConfig, y: ReturnSeries
) -> tuple[pd.DataFrame, pd.DataFrame]:
    paths = temperature_scan(d, config.ensemble(), config.temperatures)
    frames: List[pd.DataFrame] = []
    rows = []
    for temperature, thermal in sorted(paths.items()):
        lead = to_calendar_lags(thermal, y.dates)
        frame = lead.to_frame()
        frame.insert(0, "temperature", temperature)
        frames.append(frame)
        lags = lead.lag_days[lead.covered]
        rows.append(
            {
                "temperature": temperature,
                "member_i1": lead.member[0],
                "member_i2": lead.member[1],
                "free_energy_per_step": lead.free_energy_per_step,
                "mean_lag": float(np.mean(lags)),
                "median_lag": float(np.median(lags)),
                "frac_negative": float(np.mean(lags < 0)),
            }
        )
        logger.info("temperature %.4g: median lag %.4f", temperature, rows[-1]["median_lag"])
    return pd.concat(frames, ignore_index=True), pd.DataFrame(rows, columns=TEMPERATURE_SUMMARY_COLUMNS)


def _returns_frame(raw_x: ReturnSeries, x: ReturnSeries, raw_y: ReturnSeries, y: ReturnSeries) -> pd.DataFrame:
    return pd.DataFrame(
        {
            "date": [d.isoformat() for d in y.dates],
            "futures_return": raw_x.values,
            "futures_standardized": x.values,
            "vix_return": raw_y.values,
            "vix_standardized": y.values,
        }
    )
