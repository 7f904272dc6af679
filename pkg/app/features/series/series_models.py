"""Pydantic models for the two inverse-logarithm series families."""

from enum import StrEnum

from pydantic import BaseModel, ConfigDict, Field

from app.shared.atoms.atoms_models import Atom, AtomExpression


class SeriesFamily(StrEnum):
    """C: sum_{k>=3} 1/[k log k (log log k)^alpha]; D: sum_{k>=2} 1/[k (log k)^alpha]."""

    C = "c"
    D = "d"


START_INDEX: dict[SeriesFamily, int] = {SeriesFamily.C: 3, SeriesFamily.D: 2}


class SeriesSpec(BaseModel):
    """Which series to evaluate."""

    model_config = ConfigDict(frozen=True)

    family: SeriesFamily = Field(..., description="Series family, C or D")
    alpha: int = Field(..., ge=2, description="Exponent of the innermost logarithm (>= 2)")

    @property
    def start_index(self) -> int:
        """First summation index: 3 for the C-family, 2 for the D-family."""
        return START_INDEX[self.family]

    @property
    def base_expression(self) -> AtomExpression:
        """The term function as an atom: g(1,1,alpha) or g(1,alpha,0)."""
        if self.family is SeriesFamily.C:
            return AtomExpression.of(Atom(1, 1, self.alpha))
        return AtomExpression.of(Atom(1, self.alpha, 0))

    @property
    def label(self) -> str:
        return f"{self.family.value.upper()}({self.alpha})"
