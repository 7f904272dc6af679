"""Convergence-table drivers and their plain-text and CSV renderings."""

import csv
import io
from collections.abc import Sequence
from typing import Literal

from app.core.exceptions import ConfigurationError
from app.core.logging import get_logger
from app.features.engines.engines_models import EngineConfig, EvaluationReport
from app.features.engines.engines_service import euler_maclaurin_evaluate, romberg_sweep
from app.features.series.series_models import SeriesFamily, SeriesSpec
from app.features.tables.tables_models import OutputRecord, TableData
from app.shared.hpreal.hpreal import format_fixed, format_significant
from app.shared.hpreal.hpreal_models import PrecisionContext

logger = get_logger(__name__)

TableNumber = Literal[1, 2]

# Romberg convergence table: alpha = 2, s_max = 3, varying N and k_hat.
TABLE1_ALPHA = 2
TABLE1_S_MAX = 3
TABLE1_SWITCH_INDICES = (20, 40, 80)
TABLE1_K_HATS = (400, 800, 1600, 3200, 6400)
TABLE1_VALUE_DECIMALS = 19
TABLE1_CORRECTION_DECIMALS = 13
TABLE1_SHOWN_CORRECTIONS = 2

# Euler-Maclaurin convergence table: varying alpha, s_max and N.
TABLE2_ALPHAS = (2, 3, 4, 5)
TABLE2_S_MAXES = (0, 1, 2, 3, 4, 5)
TABLE2_SWITCH_INDICES = (20, 40, 80)
TABLE2_DECIMALS = 15

# Fewer working digits cannot reproduce the 19-decimal columns.
MIN_TABLE_WORKING_DIGITS = 30

COLUMN_SEPARATOR = "  "


def to_record(
    report: EvaluationReport,
    *,
    decimals: int | None = None,
    digits: int | None = None,
    correction_decimals: int | None = None,
) -> OutputRecord:
    """Render an evaluation report as an output record.

    Args:
        report: Engine result.
        decimals: Fixed number of decimals for the value.
        digits: Significant digits for the value, used when decimals is None.
        correction_decimals: Decimals for the correction columns; defaults to the
            number of decimals the value ends up with.

    Returns:
        The record with every number rounded half to even.
    """
    if decimals is not None:
        value = format_fixed(report.value, decimals)
    else:
        value = format_significant(report.value, digits if digits is not None else 15)
    if correction_decimals is None:
        correction_decimals = len(value.partition(".")[2])
    return OutputRecord(
        family=report.spec.family,
        alpha=report.spec.alpha,
        engine=report.engine,
        switch_index=report.config.switch_index,
        s_max=report.config.s_max,
        k_hat=report.config.k_hat if report.engine == "romberg" else None,
        value=value,
        corrections=tuple(
            format_fixed(correction, correction_decimals)
            for correction in report.correction_magnitudes
        ),
    )


def table1_records(precision: PrecisionContext) -> list[OutputRecord]:
    """Romberg runs for every (N, k_hat) of the convergence table, N-major."""
    spec = SeriesSpec(family=SeriesFamily.C, alpha=TABLE1_ALPHA)
    records: list[OutputRecord] = []
    for n in TABLE1_SWITCH_INDICES:
        cfg = EngineConfig(switch_index=n, s_max=TABLE1_S_MAX, precision=precision)
        for report in romberg_sweep(spec, cfg, TABLE1_K_HATS):
            records.append(
                to_record(
                    report,
                    decimals=TABLE1_VALUE_DECIMALS,
                    correction_decimals=TABLE1_CORRECTION_DECIMALS,
                )
            )
    return records


def table2_records(precision: PrecisionContext) -> list[OutputRecord]:
    """Euler-Maclaurin runs for every (alpha, s_max, N) cell, alpha-major."""
    records: list[OutputRecord] = []
    for alpha in TABLE2_ALPHAS:
        spec = SeriesSpec(family=SeriesFamily.C, alpha=alpha)
        for s_max in TABLE2_S_MAXES:
            for n in TABLE2_SWITCH_INDICES:
                cfg = EngineConfig(switch_index=n, s_max=s_max, precision=precision)
                report = euler_maclaurin_evaluate(spec, cfg)
                records.append(to_record(report, decimals=TABLE2_DECIMALS))
    return records


def table1_data(records: Sequence[OutputRecord]) -> TableData:
    """One row per record: N, k_hat, value and the first two correction columns."""
    rows = tuple(
        (
            str(record.switch_index),
            str(record.k_hat),
            record.value,
            *record.corrections[:TABLE1_SHOWN_CORRECTIONS],
        )
        for record in records
    )
    return TableData(header=("N", "k_hat", "C", "s=1", "s=2"), rows=rows)


def table2_data(records: Sequence[OutputRecord]) -> TableData:
    """One row per (alpha, s_max) with one value column per N."""
    cells = {(r.alpha, r.s_max, r.switch_index): r.value for r in records}
    rows = tuple(
        (
            str(alpha),
            str(s_max),
            *(cells[(alpha, s_max, n)] for n in TABLE2_SWITCH_INDICES),
        )
        for alpha in TABLE2_ALPHAS
        for s_max in TABLE2_S_MAXES
    )
    header = ("alpha", "s_hat", *(f"N={n}" for n in TABLE2_SWITCH_INDICES))
    return TableData(header=header, rows=rows)


def build_table(which: TableNumber, precision: PrecisionContext) -> TableData:
    """Compute one of the two convergence tables.

    Args:
        which: 1 for the Romberg table, 2 for the Euler-Maclaurin table.
        precision: Working precision.

    Returns:
        The table with all cells rendered.

    Raises:
        ConfigurationError: If precision has fewer than 30 working digits.
    """
    if precision.working_digits < MIN_TABLE_WORKING_DIGITS:
        raise ConfigurationError(
            f"table reproduction needs at least {MIN_TABLE_WORKING_DIGITS} working digits, "
            f"got {precision.working_digits}"
        )
    logger.info(
        "tables.build.table_started", table=which, working_digits=precision.working_digits
    )
    if which == 1:
        table = table1_data(table1_records(precision))
    else:
        table = table2_data(table2_records(precision))
    logger.info("tables.build.table_completed", table=which, rows=len(table.rows))
    return table


def render_plain(table: TableData) -> str:
    """Right-aligned columns separated by two spaces, one line per row."""
    lines = [table.header, *table.rows]
    widths = [max(len(line[i]) for line in lines) for i in range(len(table.header))]
    return "".join(
        COLUMN_SEPARATOR.join(cell.rjust(width) for cell, width in zip(line, widths, strict=True))
        + "\n"
        for line in lines
    )


def render_csv(table: TableData) -> str:
    """Header line plus one CSV record per row."""
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(table.header)
    writer.writerows(table.rows)
    return buffer.getvalue()


def parse_csv(text: str) -> TableData:
    """Inverse of :func:`render_csv`."""
    header, *rows = csv.reader(io.StringIO(text))
    return TableData(header=tuple(header), rows=tuple(tuple(row) for row in rows))


def records_data(records: Sequence[OutputRecord]) -> TableData:
    """Flat table of output records, one correction column per order."""
    width = max((len(record.corrections) for record in records), default=0)
    header = (
        "family",
        "alpha",
        "engine",
        "N",
        "s_max",
        "k_hat",
        "value",
        *(f"s={s}" for s in range(1, width + 1)),
    )
    rows = tuple(
        (
            record.family.value,
            str(record.alpha),
            record.engine,
            str(record.switch_index),
            str(record.s_max),
            "" if record.k_hat is None else str(record.k_hat),
            record.value,
            *record.corrections,
            *("" for _ in range(width - len(record.corrections))),
        )
        for record in records
    )
    return TableData(header=header, rows=rows)
