"""Convergence tables and machine-readable output records."""

from app.features.tables.tables_models import OutputRecord, TableData

__all__ = [
    "OutputRecord",
    "TableData",
]
