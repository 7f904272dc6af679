"""Precision context for arbitrary-precision real arithmetic."""

from fractions import Fraction
from functools import lru_cache
from typing import Any

import mpmath
from pydantic import BaseModel, ConfigDict, Field

# An mpmath mpf bound to the MPContext of a PrecisionContext.
type Real = Any


@lru_cache(maxsize=None)
def _mp_context(dps: int) -> Any:
    """Return the private mpmath context carrying ``dps`` decimal digits.

    Each digit count gets its own context; its precision is fixed at creation
    and never mutated, so values from different PrecisionContexts never share
    global state.
    """
    ctx = mpmath.MPContext()
    ctx.dps = dps
    return ctx


class PrecisionContext(BaseModel):
    """Working-precision configuration for Real values."""

    model_config = ConfigDict(frozen=True)

    working_digits: int = Field(
        default=50, ge=1, description="Decimal digits every result must carry"
    )
    guard_digits: int = Field(
        default=10, ge=1, description="Extra decimal digits carried internally"
    )

    @property
    def dps(self) -> int:
        """Total decimal digits carried by the backing context."""
        return self.working_digits + self.guard_digits

    @property
    def mp(self) -> Any:
        """The mpmath context all Real values of this precision live in."""
        return _mp_context(self.dps)

    def real(self, value: int | str | Fraction | Real) -> Real:
        """Convert a number into this context.

        Args:
            value: Integer, decimal string, exact fraction or mpf.

        Returns:
            The value as an mpf of this context's precision.
        """
        if isinstance(value, Fraction):
            return self.mp.mpf(value.numerator) / value.denominator
        return self.mp.mpf(value)

    def widened(self, extra_digits: int) -> "PrecisionContext":
        """Return a context carrying ``extra_digits`` more working digits."""
        return PrecisionContext(
            working_digits=self.working_digits + extra_digits, guard_digits=self.guard_digits
        )
