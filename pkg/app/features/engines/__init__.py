"""Acceleration engines: curvature-corrected (Romberg) and centered Euler-Maclaurin."""

from app.features.engines.engines_models import EngineConfig, EvaluationReport

__all__ = [
    "EngineConfig",
    "EvaluationReport",
]
