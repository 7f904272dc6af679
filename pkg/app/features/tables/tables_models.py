"""Pydantic models for machine-readable results and rendered tables."""

from pydantic import BaseModel, ConfigDict, Field

from app.features.engines.engines_models import EngineName
from app.features.series.series_models import SeriesFamily


class OutputRecord(BaseModel):
    """One engine result with its numbers rendered as decimal strings."""

    model_config = ConfigDict(frozen=True)

    family: SeriesFamily = Field(..., description="Series family")
    alpha: int = Field(..., description="Series exponent")
    engine: EngineName = Field(..., description="Engine that produced the value")
    switch_index: int = Field(..., description="Switch-over index N")
    s_max: int = Field(..., description="Highest correction order")
    k_hat: int | None = Field(default=None, description="Romberg truncation index")
    value: str = Field(..., description="Value, rounded half to even")
    corrections: tuple[str, ...] = Field(
        default=(), description="Correction columns, rounded half to even"
    )


class TableData(BaseModel):
    """A rendered table: header plus rows of decimal strings."""

    model_config = ConfigDict(frozen=True)

    header: tuple[str, ...] = Field(..., description="Column names")
    rows: tuple[tuple[str, ...], ...] = Field(..., description="Row cells, one tuple per row")
