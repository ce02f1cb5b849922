"""
Pytest configuration and shared fixtures for the test suite.
Ensures proper Python path and provides seeded generators and sample input files.
"""
import sys
from pathlib import Path

import numpy as np
import pandas as pd
import pytest

# Add project root and src to Python path for imports
project_root = Path(__file__).parent.parent
if str(project_root) not in sys.path:
    sys.path.insert(0, str(project_root))
src_path = project_root / "src"
if str(src_path) not in sys.path:
    sys.path.insert(0, str(src_path))


def write_sample_dataset(directory: Path, n_days: int = 300, seed: int = 0, start: str = "2005-01-03"):
    """
    Spot + futures CSVs over n_days business days. Contracts expire every 21
    days and are quoted daily until expiry; volume moves to the next contract
    five days before expiry. Returns (vix_path, futures_path).
    """
    rng = np.random.default_rng(seed)
    dates = pd.bdate_range(start, periods=n_days)
    f_ret = 0.03 * rng.standard_normal(n_days)
    v_ret = 0.8 * f_ret + 0.02 * rng.standard_normal(n_days)
    futures_level = 15.0 * np.exp(np.cumsum(f_ret))
    vix_level = 15.0 * np.exp(np.cumsum(v_ret))

    n_contracts = n_days // 21 + 2
    expiry_index = [21 * k + 20 for k in range(n_contracts)]
    expiries = [
        dates[i] if i < n_days else dates[-1] + pd.offsets.BDay(i - n_days + 1) for i in expiry_index
    ]

    rows = []
    for i, d in enumerate(dates):
        nearest = next(k for k, e in enumerate(expiry_index) if e >= i)
        days_left = expiry_index[nearest] - i
        for k in range(nearest, min(nearest + 3, n_contracts)):
            if k == nearest:
                volume = 1000 if days_left > 5 else 300
            elif k == nearest + 1:
                volume = 500 if days_left > 5 else 800
            else:
                volume = 100
            close = futures_level[i] * (1.0 + 0.01 * (k % 3))
            settle = close * (1.0 + 0.0005 * rng.standard_normal())
            rows.append(
                {
                    "date": d.strftime("%Y-%m-%d"),
                    "contract": f"VX{k:03d}",
                    "expiry": expiries[k].strftime("%Y-%m-%d"),
                    "close": f"{close:.6f}",
                    "settle": f"{settle:.6f}",
                    "volume": volume,
                }
            )

    directory.mkdir(parents=True, exist_ok=True)
    vix_path = directory / "vix.csv"
    futures_path = directory / "futures.csv"
    pd.DataFrame({"date": dates.strftime("%Y-%m-%d"), "close": [f"{v:.6f}" for v in vix_level]}).to_csv(
        vix_path, index=False
    )
    pd.DataFrame(rows).to_csv(futures_path, index=False)
    return vix_path, futures_path


@pytest.fixture
def rng():
    """Seeded generator so every test draws the same numbers."""
    return np.random.default_rng(12345)


@pytest.fixture
def sample_dataset(tmp_path):
    """300-day spot + futures files in tmp_path."""
    return write_sample_dataset(tmp_path / "data")


@pytest.fixture
def dataset_factory(tmp_path):
    def _make(name: str = "data", **kwargs):
        return write_sample_dataset(tmp_path / name, **kwargs)

    return _make


@pytest.fixture(autouse=True)
def _isolated_logging():
    """Drop package log handlers so each test configures its own."""
    from leadlag.core.logger import reset_logging

    reset_logging()
    yield
    reset_logging()
