"""Fixtures for atom algebra tests."""

import pytest

from app.shared.hpreal.hpreal_models import PrecisionContext


@pytest.fixture
def fd_precision() -> PrecisionContext:
    """Precision used by the finite-difference oracle.

    Carries well over 20 digits beyond the 1e-8 comparison tolerance, so the
    difference quotients are limited by truncation rather than rounding.

    Returns:
        A precision context reserved for finite-difference checks.
    """
    return PrecisionContext(working_digits=40, guard_digits=7)
