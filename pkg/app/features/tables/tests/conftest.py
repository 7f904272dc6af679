"""Fixtures for convergence-table tests."""

from pathlib import Path

import pytest

from app.features.tables.tables_models import TableData
from app.features.tables.tables_service import build_table
from app.shared.hpreal.hpreal_models import PrecisionContext

GOLDEN_DIR = Path(__file__).resolve().parents[1] / "golden"


@pytest.fixture(scope="module")
def table2() -> TableData:
    """The Euler-Maclaurin convergence table, built once per module.

    Returns:
        Rendered Table 2 cells.
    """
    return build_table(2, PrecisionContext())


@pytest.fixture
def golden() -> Path:
    """Directory holding the checked-in plain-text tables.

    Returns:
        Path to the golden directory.
    """
    return GOLDEN_DIR
