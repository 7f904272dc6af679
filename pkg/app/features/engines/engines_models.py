"""Pydantic models for engine configuration and evaluation reports."""

from typing import Literal, Self

from pydantic import BaseModel, ConfigDict, Field, model_validator

from app.features.series.series_models import SeriesSpec
from app.shared.hpreal.hpreal_models import PrecisionContext, Real

EngineName = Literal["romberg", "em", "direct"]


class EngineConfig(BaseModel):
    """Algorithm knobs shared by both acceleration engines."""

    model_config = ConfigDict(frozen=True)

    switch_index: int = Field(..., ge=2, description="Last index N summed directly")
    s_max: int = Field(default=0, ge=0, description="Highest correction order included")
    k_hat: int | None = Field(
        default=None, description="Last index of the Romberg derivative sums"
    )
    upper_index: int | None = Field(
        default=None,
        description="Finite-tail analog: sum only up to this index instead of infinity",
    )
    precision: PrecisionContext = Field(
        default_factory=PrecisionContext, description="Working precision"
    )

    @model_validator(mode="after")
    def check_indices(self) -> Self:
        """k_hat and upper_index lie beyond N, and k_hat never exceeds upper_index."""
        if self.k_hat is not None and self.k_hat <= self.switch_index:
            raise ValueError(f"k_hat = {self.k_hat} must exceed N = {self.switch_index}")
        if self.upper_index is not None:
            if self.upper_index <= self.switch_index:
                raise ValueError(
                    f"upper_index = {self.upper_index} must exceed N = {self.switch_index}"
                )
            if self.k_hat is not None and self.k_hat > self.upper_index:
                raise ValueError(f"k_hat = {self.k_hat} exceeds upper_index = {self.upper_index}")
        return self


class EvaluationReport(BaseModel):
    """Result of one engine run."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    engine: EngineName = Field(..., description="Engine that produced the value")
    spec: SeriesSpec = Field(..., description="Series evaluated")
    config: EngineConfig = Field(..., description="Configuration used")
    value: Real = Field(..., description="Estimate of the series limit")
    correction_magnitudes: list[Real] = Field(
        default_factory=list,
        description=(
            "One entry per order s: cumulative curvature-correction sums (romberg) "
            "or individual odd-derivative terms (em)"
        ),
    )

    @model_validator(mode="after")
    def check_corrections(self) -> Self:
        """Exactly s_max correction entries."""
        if len(self.correction_magnitudes) != self.config.s_max:
            raise ValueError(
                f"{len(self.correction_magnitudes)} corrections reported for s_max = "
                f"{self.config.s_max}"
            )
        return self
