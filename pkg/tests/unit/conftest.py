"""
Unit test fixtures. Small hand-built inputs; no files beyond tmp_path.
"""
import numpy as np
import pytest

from leadlag.tops.types import DistanceMatrix


@pytest.fixture
def small_distance(rng):
    """6x6 distance matrix of two independent standard normal draws."""
    x, y = rng.standard_normal(6), rng.standard_normal(6)
    return DistanceMatrix(np.abs(x[:, None] - y[None, :]))
