"""Figure rendering for cocyclelab experiment outputs (read-only consumer)."""

__version__ = "0.1.0"

from .figures import FigureSpec, render
from .reader import (
    HistogramData,
    SchemaError,
    SeriesData,
    read_histogram,
    read_metadata,
    read_series,
)

__all__ = [
    "__version__",
    "FigureSpec",
    "render",
    "HistogramData",
    "SchemaError",
    "SeriesData",
    "read_histogram",
    "read_metadata",
    "read_series",
]
