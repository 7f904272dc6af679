"""Fixtures for series tests."""

import pytest

from app.features.series.series_models import SeriesFamily, SeriesSpec


@pytest.fixture
def d2_spec() -> SeriesSpec:
    """The D-family series at alpha = 2.

    Returns:
        Series specification for sum 1/[k (log k)^2].
    """
    return SeriesSpec(family=SeriesFamily.D, alpha=2)
