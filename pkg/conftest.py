"""Project-wide pytest configuration and fixtures."""

import pytest

from app.core.logging import run_id_var, setup_logging
from app.features.series.series_models import SeriesFamily, SeriesSpec
from app.shared.hpreal.hpreal_models import PrecisionContext


@pytest.fixture(autouse=True)
def quiet_logging() -> None:
    """Route library logs to stderr at WARNING so stdout stays clean."""
    setup_logging(log_level="WARNING")
    run_id_var.set("")


@pytest.fixture
def precision() -> PrecisionContext:
    """Default working precision: 50 digits plus 10 guard digits.

    Returns:
        The precision context used by the convergence tables.
    """
    return PrecisionContext(working_digits=50, guard_digits=10)


@pytest.fixture
def c2_spec() -> SeriesSpec:
    """The C-family series at alpha = 2, the main worked example.

    Returns:
        Series specification for sum 1/[k log k (log log k)^2].
    """
    return SeriesSpec(family=SeriesFamily.C, alpha=2)
