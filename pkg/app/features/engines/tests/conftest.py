"""Fixtures for engine tests."""

import pytest

from app.features.engines.engines_models import EngineConfig, EvaluationReport
from app.features.engines.engines_service import romberg_sweep
from app.features.series.series_models import SeriesFamily, SeriesSpec
from app.shared.hpreal.hpreal_models import PrecisionContext

ROMBERG_K_HATS = (400, 800, 1600, 3200, 6400)


@pytest.fixture(scope="module")
def romberg_table() -> dict[tuple[int, int], EvaluationReport]:
    """Romberg runs at alpha = 2, s_max = 3 for every (N, k_hat) of the convergence table.

    Computed once per module: one sweep over k per N.

    Returns:
        Reports keyed by (N, k_hat).
    """
    spec = SeriesSpec(family=SeriesFamily.C, alpha=2)
    reports: dict[tuple[int, int], EvaluationReport] = {}
    for n in (20, 40, 80):
        cfg = EngineConfig(switch_index=n, s_max=3, precision=PrecisionContext())
        for report in romberg_sweep(spec, cfg, ROMBERG_K_HATS):
            reports[(n, report.config.k_hat or 0)] = report
    return reports
