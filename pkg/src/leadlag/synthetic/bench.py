"""
Benchmark runner: generate -> TOPS -> score for each scenario.

Lagged scenarios report recovery quality; oracle scenarios compare the
recursion against exhaustive enumeration on a random small lattice.
"""

from __future__ import annotations

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Dict, List, Sequence

import numpy as np
import pandas as pd

from leadlag.core.logger import log_step
from leadlag.synthetic.generator import generate_lagged_pair, random_distance_matrix
from leadlag.synthetic.oracle import brute_force_thermal_oracle
from leadlag.synthetic.scenarios import LagScenario
from leadlag.synthetic.scoring import central_median, recovery_score
from leadlag.tops.calendar import to_calendar_lags
from leadlag.tops.distance import distance_matrix
from leadlag.tops.ensemble import tops_ensemble
from leadlag.tops.thermal import thermal_average_path, thermal_weights
from leadlag.tops.types import EnsembleConfig, LatticeNode

logger = logging.getLogger(__name__)

ORACLE_TOLERANCE = 1e-9

REPORT_COLUMNS = [
    "scenario",
    "kind",
    "n",
    "temperature",
    "margin",
    "noise_std",
    "seed",
    "rmse",
    "switch_latency",
    "central_median",
    "oracle_max_abs_diff",
    "status",
    "runtime_s",
]


def oracle_max_abs_diff(n: int, seed: int, temperature: float) -> float:
    """Largest |recursion - enumeration| over t on the full-diagonal member of a random lattice."""
    d = random_distance_matrix(n, seed)
    start, end = LatticeNode.at(0, 0), LatticeNode.at(n - 1, n - 1)
    fwd = thermal_weights(d, temperature, start, end, "forward")
    bwd = thermal_weights(d, temperature, start, end, "backward")
    path = thermal_average_path(fwd, bwd)
    oracle = brute_force_thermal_oracle(d, temperature, start, end)
    return float(np.max(np.abs(path.x_values - oracle.x_values)))


def run_scenario(scenario: LagScenario, cfg: EnsembleConfig) -> Dict[str, Any]:
    temperature = scenario.temperature or cfg.temperature
    margin = cfg.margin if scenario.margin is None else scenario.margin
    row: Dict[str, Any] = {col: None for col in REPORT_COLUMNS}
    row.update(
        scenario=scenario.name,
        kind=scenario.kind,
        temperature=temperature,
        noise_std=scenario.noise_std,
        seed=scenario.seed,
    )
    started = time.perf_counter()
    with log_step(logger, f"bench scenario={scenario.name}"):
        if scenario.kind == "oracle":
            diff = oracle_max_abs_diff(scenario.n, scenario.seed, temperature)
            row.update(n=scenario.n, oracle_max_abs_diff=diff, status="PASS" if diff <= ORACLE_TOLERANCE else "FAIL")
        else:
            pair = generate_lagged_pair(scenario)
            run_cfg = cfg.model_copy(update={"temperature": temperature, "margin": margin})
            path = tops_ensemble(distance_matrix(pair.x, pair.y), run_cfg)
            lead = to_calendar_lags(path, pair.y.dates)
            score = recovery_score(lead, pair.truth, scenario.burn)
            row.update(
                n=len(pair.x),
                margin=margin,
                rmse=score.rmse,
                switch_latency=score.switch_latency,
                central_median=central_median(lead, scenario.burn),
                status="OK",
            )
    row["runtime_s"] = round(time.perf_counter() - started, 3)
    return row


def run_bench(scenarios: Sequence[LagScenario], cfg: EnsembleConfig) -> pd.DataFrame:
    """
    One report row per scenario, in input order. With cfg.workers > 1 and
    more than one scenario, scenarios are spread over a process pool and
    each runs its ensemble serially.
    """
    if cfg.workers > 1 and len(scenarios) > 1:
        serial = cfg.model_copy(update={"workers": 1})
        with ProcessPoolExecutor(max_workers=min(cfg.workers, len(scenarios))) as pool:
            rows: List[Dict[str, Any]] = list(pool.map(run_scenario, scenarios, [serial] * len(scenarios)))
    else:
        rows = [run_scenario(s, cfg) for s in scenarios]
    return pd.DataFrame(rows, columns=REPORT_COLUMNS)
