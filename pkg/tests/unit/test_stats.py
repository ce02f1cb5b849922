"""Unit tests for summary statistics, JB / ADF tests, correlation and OLS against closed forms."""
import math

import numpy as np
import pytest

from leadlag.core.errors import (
    ConfigurationError,
    DegenerateSeriesError,
    InsufficientDataError,
    LengthMismatchError,
)
from leadlag.stats import (
    adf_test,
    jarque_bera,
    ols_fit,
    pearson_correlation,
    rolling_ols,
    schwert_lags,
    summary_stats,
)

ONE_TO_TEN = np.arange(1.0, 11.0)


@pytest.mark.unit
class TestSummaryStats:
    def test_one_to_ten(self):
        s = summary_stats(ONE_TO_TEN)
        assert s.n == 10
        assert s.mean == pytest.approx(5.5, abs=1e-12)
        assert (s.maximum, s.minimum) == (10.0, 1.0)
        assert s.std_dev == pytest.approx(math.sqrt(82.5 / 9.0), abs=1e-10)
        assert s.skewness == pytest.approx(0.0, abs=1e-10)
        # m4 / m2^2 with m2 = 8.25, m4 = 120.8625
        assert s.kurtosis == pytest.approx(3223.0 / 1815.0, abs=1e-10)

    def test_bernoulli_quarter(self):
        s = summary_stats([0.0, 0.0, 0.0, 1.0])
        assert s.skewness == pytest.approx(2.0 / math.sqrt(3.0), abs=1e-10)
        assert s.kurtosis == pytest.approx(7.0 / 3.0, abs=1e-10)
        assert s.std_dev == pytest.approx(0.5, abs=1e-12)

    def test_constant_is_degenerate(self):
        with pytest.raises(DegenerateSeriesError):
            summary_stats([2.0, 2.0, 2.0])

    def test_too_short(self):
        with pytest.raises(InsufficientDataError):
            summary_stats([1.0])

    def test_to_dict(self):
        assert set(summary_stats(ONE_TO_TEN).to_dict()) == {
            "mean",
            "maximum",
            "minimum",
            "std_dev",
            "skewness",
            "kurtosis",
            "n",
        }

    def test_shape_ignores_affine_rescaling(self, rng):
        x = rng.standard_normal(200) ** 3
        base = summary_stats(x)
        scaled = summary_stats(2.5 * x - 4.0)
        assert scaled.skewness == pytest.approx(base.skewness, abs=1e-10)
        assert scaled.kurtosis == pytest.approx(base.kurtosis, abs=1e-10)
        assert scaled.std_dev == pytest.approx(2.5 * base.std_dev, rel=1e-12)


@pytest.mark.unit
class TestJarqueBera:
    def test_matches_closed_form(self):
        kurt = 3223.0 / 1815.0
        expected = 10.0 / 6.0 * ((kurt - 3.0) ** 2 / 4.0)
        result = jarque_bera(ONE_TO_TEN)
        assert result.statistic == pytest.approx(expected, abs=1e-10)
        # chi-squared(2) survival function is exp(-x / 2)
        assert result.p_value == pytest.approx(math.exp(-expected / 2.0), abs=1e-10)

    def test_needs_eight_points(self):
        with pytest.raises(InsufficientDataError):
            jarque_bera(np.arange(7.0))

    @pytest.mark.parametrize("seed", range(5))
    def test_statistic_is_non_negative(self, seed):
        sample = np.random.default_rng(seed).standard_normal(50)
        result = jarque_bera(sample)
        assert result.statistic >= 0.0
        assert 0.0 <= result.p_value <= 1.0


@pytest.mark.unit
class TestOls:
    def test_closed_form(self):
        # sxx = 5, sxy = 5.5, residuals (-0.1, 0.8, -1.3, 0.6), ssr = 2.7
        result = ols_fit([1.0, 3.0, 2.0, 5.0], [0.0, 1.0, 2.0, 3.0])
        se = math.sqrt(0.27)
        t = 1.1 / se
        assert result.slope == pytest.approx(1.1, abs=1e-10)
        assert result.intercept == pytest.approx(1.1, abs=1e-10)
        assert result.slope_std_err == pytest.approx(se, abs=1e-10)
        assert result.t_stat == pytest.approx(t, abs=1e-10)
        # Student t with 2 dof: two-sided p = 1 - t / sqrt(t^2 + 2)
        assert result.p_value == pytest.approx(1.0 - t / math.sqrt(t * t + 2.0), abs=1e-10)
        np.testing.assert_allclose(result.residuals, [-0.1, 0.8, -1.3, 0.6], atol=1e-10)
        assert result.n_obs == 4

    def test_exact_fit(self):
        x = np.arange(6.0)
        result = ols_fit(1.0 + 2.0 * x, x)
        assert result.slope == pytest.approx(2.0, abs=1e-12)
        assert result.p_value == pytest.approx(0.0, abs=1e-12)

    def test_constant_regressor(self):
        with pytest.raises(DegenerateSeriesError):
            ols_fit([1.0, 2.0, 3.0], [1.0, 1.0, 1.0])

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatchError):
            ols_fit([1.0, 2.0, 3.0], [1.0, 2.0, 3.0, 4.0])

    def test_rolling_matches_single_fits(self, rng):
        x, y = rng.standard_normal(40), rng.standard_normal(40)
        frame = rolling_ols(y, x, 12)
        assert list(frame["end"]) == list(range(11, 40))
        for row in frame.itertuples(index=False):
            single = ols_fit(y[row.end - 11 : row.end + 1], x[row.end - 11 : row.end + 1])
            assert row.slope == pytest.approx(single.slope, abs=1e-10)
            assert row.intercept == pytest.approx(single.intercept, abs=1e-10)
            assert row.slope_std_err == pytest.approx(single.slope_std_err, abs=1e-10)
            assert row.p_value == pytest.approx(single.p_value, abs=1e-10)

    def test_rolling_flags_constant_windows(self):
        x = np.array([1.0, 1.0, 1.0, 2.0, 3.0])
        frame = rolling_ols(np.arange(5.0), x, 3)
        assert math.isnan(frame["slope"].iloc[0])
        assert math.isnan(frame["p_value"].iloc[0])
        assert frame["slope"].iloc[2] == pytest.approx(1.0)

    def test_residuals_are_orthogonal_to_regressor(self, rng):
        x = rng.standard_normal(60)
        y = 0.3 + 1.7 * x + rng.standard_normal(60)
        refit = ols_fit(ols_fit(y, x).residuals, x)
        assert refit.slope == pytest.approx(0.0, abs=1e-10)
        assert refit.intercept == pytest.approx(0.0, abs=1e-10)

    def test_rolling_short_series_is_empty(self):
        frame = rolling_ols(np.arange(4.0), np.arange(4.0), 5)
        assert frame.empty
        assert list(frame.columns) == ["end", "intercept", "slope", "slope_std_err", "t_stat", "p_value"]

    def test_rolling_exact_fit_is_significant(self):
        x = np.array([0.0, 2.0, 1.0, 3.0, 5.0, 4.0, 6.0, 8.0])
        frame = rolling_ols(1.0 - 0.5 * x, x, 4)
        np.testing.assert_allclose(frame["slope"], -0.5, rtol=0, atol=1e-10)
        assert (frame["p_value"] < 1e-6).all()


@pytest.mark.unit
class TestCorrelation:
    def test_perfect(self):
        assert pearson_correlation([1.0, 2.0, 3.0], [2.0, 4.0, 6.0]) == pytest.approx(1.0, abs=1e-12)
        assert pearson_correlation([1.0, 2.0, 3.0], [3.0, 2.0, 1.0]) == pytest.approx(-1.0, abs=1e-12)

    def test_constant(self):
        with pytest.raises(DegenerateSeriesError):
            pearson_correlation([1.0, 1.0, 1.0], [1.0, 2.0, 3.0])

    def test_affine_invariance(self, rng):
        x, y = rng.standard_normal(100), rng.standard_normal(100)
        base = pearson_correlation(x, y)
        assert pearson_correlation(3.0 * x + 1.0, 0.2 * y - 5.0) == pytest.approx(base, abs=1e-10)
        assert pearson_correlation(-x, y) == pytest.approx(-base, abs=1e-10)


@pytest.mark.unit
class TestAdf:
    def test_schwert_lags(self):
        assert schwert_lags(100) == 12
        assert schwert_lags(2000) == 25

    def test_too_short(self):
        with pytest.raises(InsufficientDataError):
            adf_test(np.arange(20.0))

    def test_unknown_variant(self, rng):
        with pytest.raises(ConfigurationError):
            adf_test(rng.standard_normal(100), "drift")

    def test_white_noise_rejects_unit_root(self):
        noise = np.random.default_rng(7).standard_normal(2000)
        for variant in ("constant", "constant_and_trend"):
            assert adf_test(noise, variant).p_value < 0.01

    def test_random_walk_keeps_unit_root(self):
        p_values = [
            adf_test(np.cumsum(np.random.default_rng(seed).standard_normal(2000)), "constant").p_value
            for seed in range(9)
        ]
        assert sum(p > 0.10 for p in p_values) >= 5

    def test_trend_stationary_rejects_with_trend_variant(self):
        n = 600
        series = 0.05 * np.arange(n) + np.random.default_rng(3).standard_normal(n)
        assert adf_test(series, "constant_and_trend").p_value < 0.05

    def test_detail_names_lag_order(self, rng):
        result = adf_test(rng.standard_normal(300), "constant", lags=3)
        assert result.detail == "constant, lags=3"
