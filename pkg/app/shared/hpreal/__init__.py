"""Arbitrary-precision real arithmetic backed by private mpmath contexts."""

from app.shared.hpreal.hpreal import exp, format_fixed, format_significant, ln, rational_to_real
from app.shared.hpreal.hpreal_models import PrecisionContext, Real

__all__ = [
    "PrecisionContext",
    "Real",
    "exp",
    "format_fixed",
    "format_significant",
    "ln",
    "rational_to_real",
]
