"""Series definitions: terms, partial sums and tail integrals."""

from app.features.series.series_models import SeriesFamily, SeriesSpec

__all__ = [
    "SeriesFamily",
    "SeriesSpec",
]
