"""Exact rational arithmetic: Bernoulli numbers and correction coefficients."""

from app.shared.exactnum.exactnum import (
    bernoulli_even,
    bernoulli_numbers,
    beta,
    beta_via_compositions,
    compositions,
    curvature_coefficient,
    em_coefficient,
)

__all__ = [
    "bernoulli_even",
    "bernoulli_numbers",
    "beta",
    "beta_via_compositions",
    "compositions",
    "curvature_coefficient",
    "em_coefficient",
]
