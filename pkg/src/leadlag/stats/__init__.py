from leadlag.stats.descriptive import pearson_correlation, summary_stats
from leadlag.stats.hypothesis import adf_test, jarque_bera, schwert_lags
from leadlag.stats.regression import ols_fit, rolling_ols
from leadlag.stats.types import RegressionResult, SummaryStats, TestResult

__all__ = [
    "RegressionResult",
    "SummaryStats",
    "TestResult",
    "adf_test",
    "jarque_bera",
    "ols_fit",
    "pearson_correlation",
    "rolling_ols",
    "schwert_lags",
    "summary_stats",
]
