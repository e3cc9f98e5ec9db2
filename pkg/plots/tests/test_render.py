"""Figure rendering: the three kinds produce image files from fixtures."""

from pathlib import Path

import pytest

from cocyclelab_plots.cli import main
from cocyclelab_plots.figures import FigureSpec, render

FIXTURES = Path(__file__).resolve().parent.parent.parent / "contract_fixtures"


class TestRender:
    def test_convergence_figure(self, tmp_path):
        out = tmp_path / "conv.png"
        render(
            FigureSpec(
                kind="convergence",
                inputs=[str(FIXTURES / "convergence.csv")],
                output=str(out),
                metadata=str(FIXTURES / "convergence.csv.meta.json"),
            )
        )
        assert out.exists() and out.stat().st_size > 1000

    def test_convergence_overlay(self, tmp_path):
        out = tmp_path / "overlay.png"
        render(
            FigureSpec(
                kind="convergence",
                inputs=[
                    str(FIXTURES / "convergence.csv"),
                    str(FIXTURES / "convergence.csv"),
                ],
                output=str(out),
                title="baseline vs current",
            )
        )
        assert out.exists() and out.stat().st_size > 1000

    def test_short_interval_figure(self, tmp_path):
        out = tmp_path / "short.png"
        render(
            FigureSpec(
                kind="short_interval",
                inputs=[str(FIXTURES / "short_interval.csv")],
                output=str(out),
                metadata=str(FIXTURES / "short_interval.csv.meta.json"),
            )
        )
        assert out.exists() and out.stat().st_size > 1000

    def test_histogram_figure_with_atoms(self, tmp_path):
        out = tmp_path / "hist.png"
        render(
            FigureSpec(
                kind="histogram",
                inputs=[str(FIXTURES / "histogram.csv")],
                output=str(out),
                metadata=str(FIXTURES / "histogram.csv.meta.json"),
            )
        )
        assert out.exists() and out.stat().st_size > 1000

    def test_unknown_kind_rejected(self):
        with pytest.raises(ValueError):
            FigureSpec(kind="pie", inputs=["x.csv"], output="y.png")

    def test_missing_input_rejected(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            FigureSpec(
                kind="convergence",
                inputs=[str(tmp_path / "absent.csv")],
                output=str(tmp_path / "o.png"),
            )


class TestCli:
    def test_render_subcommand(self, tmp_path):
        out = tmp_path / "fig.png"
        code = main(
            [
                "render",
                "--kind",
                "convergence",
                "--in",
                str(FIXTURES / "convergence.csv"),
                "--meta",
                str(FIXTURES / "convergence.csv.meta.json"),
                "--out",
                str(out),
            ]
        )
        assert code == 0 and out.exists()

    def test_schema_mismatch_exit_2(self, tmp_path):
        bad = tmp_path / "bad.csv"
        bad.write_text("a,b\n1,2\n")
        code = main(
            ["render", "--kind", "convergence", "--in", str(bad), "--out", str(tmp_path / "f.png")]
        )
        assert code == 2
