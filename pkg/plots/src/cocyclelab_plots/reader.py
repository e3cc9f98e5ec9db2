"""Parsers for the experiment CSV/JSON schemas.

This package is a read-only consumer: it never imports the lab itself, only
its files.  Schema violations raise :class:`SchemaError` naming the column
(or field) that broke the contract.

Schemas:
  series      header ``checkpoint,re,im,abs``; checkpoint ascending ints
  histogram   header ``bin_lo,bin_hi,mass``; contiguous uniform bins,
              masses summing to 1
  metadata    JSON object with at least ``command``, ``version``, ``params``
"""

from __future__ import annotations

import csv
import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

SERIES_COLUMNS = ["checkpoint", "re", "im", "abs"]
HISTOGRAM_COLUMNS = ["bin_lo", "bin_hi", "mass"]


class SchemaError(ValueError):
    """A file does not match its declared schema; the message names the
    offending column or field."""


@dataclass
class SeriesData:
    path: str
    checkpoints: list[int]
    values: np.ndarray  # complex
    magnitudes: np.ndarray

    def label(self) -> str:
        return Path(self.path).stem


@dataclass
class HistogramData:
    path: str
    bin_edges: np.ndarray
    masses: np.ndarray
    atoms: list[int] = field(default_factory=list)

    def atom_positions(self, threshold: float = 0.1) -> list[tuple[float, float]]:
        centers = (self.bin_edges[:-1] + self.bin_edges[1:]) / 2
        return [
            (float(centers[i]), float(self.masses[i]))
            for i in np.nonzero(self.masses > threshold)[0]
        ]


def _check_header(got: list[str], want: list[str], path) -> None:
    if got != want:
        missing = [c for c in want if c not in got]
        extra = [c for c in got if c not in want]
        name = (missing + extra + ["order"])[0]
        raise SchemaError(
            f"{path}: bad header column {name!r} (got {got}, want {want})"
        )


def _parse_cell(row: dict, column: str, kind, path, line: int):
    raw = row.get(column)
    if raw is None or raw == "":
        raise SchemaError(f"{path}:{line}: missing value in column {column!r}")
    try:
        return kind(raw)
    except ValueError:
        raise SchemaError(
            f"{path}:{line}: column {column!r} is not a {kind.__name__}: {raw!r}"
        ) from None


def read_series(path) -> SeriesData:
    checkpoints: list[int] = []
    values: list[complex] = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        _check_header(reader.fieldnames or [], SERIES_COLUMNS, path)
        for i, row in enumerate(reader, start=2):
            n = _parse_cell(row, "checkpoint", int, path, i)
            re = _parse_cell(row, "re", float, path, i)
            im = _parse_cell(row, "im", float, path, i)
            mag = _parse_cell(row, "abs", float, path, i)
            if abs(abs(complex(re, im)) - mag) > 1e-9:
                raise SchemaError(
                    f"{path}:{i}: column 'abs' inconsistent with re/im"
                )
            checkpoints.append(n)
            values.append(complex(re, im))
    if checkpoints != sorted(set(checkpoints)):
        raise SchemaError(f"{path}: column 'checkpoint' must increase strictly")
    if not checkpoints:
        raise SchemaError(f"{path}: no data rows")
    arr = np.array(values, dtype=complex)
    return SeriesData(str(path), checkpoints, arr, np.abs(arr))


def read_histogram(path) -> HistogramData:
    lows: list[float] = []
    highs: list[float] = []
    masses: list[float] = []
    with open(path, newline="") as fh:
        reader = csv.DictReader(fh)
        _check_header(reader.fieldnames or [], HISTOGRAM_COLUMNS, path)
        for i, row in enumerate(reader, start=2):
            lows.append(_parse_cell(row, "bin_lo", float, path, i))
            highs.append(_parse_cell(row, "bin_hi", float, path, i))
            masses.append(_parse_cell(row, "mass", float, path, i))
    if not lows:
        raise SchemaError(f"{path}: no data rows")
    for i in range(1, len(lows)):
        if abs(lows[i] - highs[i - 1]) > 1e-9:
            raise SchemaError(f"{path}: column 'bin_lo' not contiguous at row {i + 2}")
    total = sum(masses)
    if abs(total - 1.0) > 1e-9:
        raise SchemaError(f"{path}: column 'mass' sums to {total!r}, not 1")
    edges = np.array(lows + [highs[-1]])
    masses_arr = np.array(masses)
    atoms = [int(i) for i in np.nonzero(masses_arr > 0.1)[0]]
    return HistogramData(str(path), edges, masses_arr, atoms)


def read_metadata(path) -> dict:
    with open(path) as fh:
        try:
            meta = json.load(fh)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{path}: not valid JSON ({exc})") from None
    for fieldname in ("command", "version", "params"):
        if fieldname not in meta:
            raise SchemaError(f"{path}: metadata field {fieldname!r} missing")
    return meta


def series_model(data: SeriesData) -> dict:
    """Plain-JSON model of a parsed series (used by golden-file tests)."""
    return {
        "checkpoints": data.checkpoints,
        "re": [v.real for v in data.values],
        "im": [v.imag for v in data.values],
        "abs": [float(m) for m in data.magnitudes],
    }


def histogram_model(data: HistogramData) -> dict:
    return {
        "edges": [float(e) for e in data.bin_edges],
        "masses": [float(m) for m in data.masses],
        "atoms": data.atoms,
    }
