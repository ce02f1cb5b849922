"""
Recovery of known lags on generated pairs with the full ensemble (M = 30).
Slow: each run evaluates 961 members on a 300-day lattice.
"""
import os

import numpy as np
import pytest

from leadlag.synthetic import LagScenario, central_median, generate_lagged_pair, recovery_score
from leadlag.tops import EnsembleConfig, distance_matrix, temperature_scan, to_calendar_lags, tops_ensemble

BURN = 30


def _config(temperature=2.0, margin=30):
    return EnsembleConfig(margin=margin, temperature=temperature, workers=os.cpu_count() or 1)


def _recover(scenario, cfg):
    pair = generate_lagged_pair(scenario)
    lead = to_calendar_lags(tops_ensemble(distance_matrix(pair.x, pair.y), cfg), pair.y.dates)
    return lead, pair


@pytest.mark.integration
@pytest.mark.slow
class TestSyntheticRecovery:
    def test_constant_lag(self):
        lead, pair = _recover(LagScenario(segments=[(300, 5)], seed=42), _config())
        assert 4.5 <= central_median(lead, BURN) <= 5.5
        assert recovery_score(lead, pair.truth, BURN).rmse < 1.0

    def test_lag_switch(self):
        lead, pair = _recover(LagScenario(segments=[(150, 5), (150, -5)], seed=42), _config())
        score = recovery_score(lead, pair.truth, BURN)
        assert score.switch_latency is not None
        assert score.switch_latency <= 20

    def test_temperature_robustness(self):
        pair = generate_lagged_pair(LagScenario(segments=[(300, 5)], seed=42))
        paths = temperature_scan(distance_matrix(pair.x, pair.y), _config(), [0.5, 1.0, 1.5, 2.0])
        medians = [central_median(to_calendar_lags(p, pair.y.dates), BURN) for p in paths.values()]
        assert max(medians) - min(medians) <= 1.0

    def test_noise_degrades_recovery(self):
        levels = (0.0, 0.2, 0.5, 1.0)
        cfg = _config(margin=10)
        rmse = {level: [] for level in levels}
        for seed in range(5):
            for level in levels:
                lead, pair = _recover(LagScenario(segments=[(300, 5)], noise_std=level, seed=seed), cfg)
                rmse[level].append(recovery_score(lead, pair.truth, BURN).rmse)
        means = [float(np.mean(rmse[level])) for level in levels]
        assert means[-1] >= means[0]
        # adjacent levels may swap within sampling noise
        assert all(b >= a - 0.25 for a, b in zip(means, means[1:]))
