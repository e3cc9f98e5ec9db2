"""Non-interactive figure rendering.

Three figure kinds, one per emitted data shape:

* ``convergence``     |statistic| against checkpoint N, log-x, one line per
                      input series (overlays support baseline-vs-current)
* ``short_interval``  statistic against window length H
* ``histogram``       mass bars with atoms (mass > 0.1) annotated

Figures are batch artifacts written to disk; there is no interactive mode.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .reader import (
    SchemaError,
    read_histogram,
    read_metadata,
    read_series,
)

KINDS = ("convergence", "short_interval", "histogram")


@dataclass
class FigureSpec:
    kind: str
    inputs: list[str]
    output: str
    metadata: str | None = None
    title: str | None = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown figure kind {self.kind!r}")
        if not self.inputs:
            raise ValueError("at least one input CSV is required")
        for p in self.inputs:
            if not Path(p).exists():
                raise FileNotFoundError(p)
        if self.metadata and not Path(self.metadata).exists():
            raise FileNotFoundError(self.metadata)


def _title_from_metadata(spec: FigureSpec, fallback: str) -> str:
    if spec.title:
        return spec.title
    if spec.metadata:
        meta = read_metadata(spec.metadata)
        params = meta.get("params", {})
        interesting = {
            k: v
            for k, v in params.items()
            if isinstance(v, (str, int, float)) and k not in ("n",)
        }
        head = meta.get("command", fallback)
        tail = ", ".join(f"{k}={v}" for k, v in sorted(interesting.items())[:5])
        return f"{head}: {tail}" if tail else head
    return fallback


def _render_convergence(spec: FigureSpec, ax) -> None:
    for path in spec.inputs:
        data = read_series(path)
        ax.plot(data.checkpoints, data.magnitudes, marker="o", label=data.label())
    ax.set_xscale("log")
    ax.set_xlabel("N")
    ax.set_ylabel("|average|")
    ax.axhline(0.0, color="gray", lw=0.5)
    if len(spec.inputs) > 1:
        ax.legend()


def _render_short_interval(spec: FigureSpec, ax) -> None:
    for path in spec.inputs:
        data = read_series(path)
        ax.plot(data.checkpoints, data.magnitudes, marker="s", label=data.label())
    ax.set_xscale("log")
    ax.set_xlabel("H")
    ax.set_ylabel("double average")
    if len(spec.inputs) > 1:
        ax.legend()


def _render_histogram(spec: FigureSpec, ax) -> None:
    if len(spec.inputs) != 1:
        raise ValueError("histogram figures take exactly one input")
    data = read_histogram(spec.inputs[0])
    widths = data.bin_edges[1:] - data.bin_edges[:-1]
    ax.bar(
        data.bin_edges[:-1],
        data.masses,
        width=widths,
        align="edge",
        edgecolor="black",
        linewidth=0.3,
    )
    for x, mass in data.atom_positions():
        ax.annotate(
            f"atom {mass:.2f}",
            xy=(x, mass),
            xytext=(x, mass * 1.02),
            ha="center",
            fontsize=8,
        )
    ax.set_xlabel("value")
    ax.set_ylabel("mass")


_RENDERERS = {
    "convergence": _render_convergence,
    "short_interval": _render_short_interval,
    "histogram": _render_histogram,
}


def render(spec: FigureSpec) -> str:
    """Render the figure and return the output path."""
    fig, ax = plt.subplots(figsize=(6.4, 4.2), dpi=120)
    try:
        _RENDERERS[spec.kind](spec, ax)
        ax.set_title(_title_from_metadata(spec, spec.kind))
        fig.tight_layout()
        fig.savefig(spec.output)
    finally:
        plt.close(fig)
    return spec.output
