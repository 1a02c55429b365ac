"""Tests for CSV and plot emission."""

import math

import pytest

from src.models.results import Flag
from src.models.sweep import SweepResult, SweepRow
from src.utils.csv_writer import emit, read_sweep_csv, rows_from_frame, write_sweep_csv
from src.utils.errors import OutputError


@pytest.fixture
def result():
    rows = [SweepRow(axis=i / 49, value=(i / 49) ** 2 / 3, flags=()) for i in range(50)]
    rows[10] = SweepRow(axis=rows[10].axis, value=float("nan"), flags=(Flag.UNDEFINED,))
    rows[20] = SweepRow(axis=rows[20].axis, value=1e10, flags=(Flag.SECTOR_CROSSING, Flag.TRUNCATION_WARNING))
    return SweepResult(
        name="demo",
        header={"tool": "spinqpt", "quantity": "qfi", "axis": "g_tilde"},
        rows=rows,
        reproduction_choices=("N = 200",),
    )


class TestWriteSweepCsv:
    """Tests for the CSV layout."""

    def test_layout(self, result, tmp_path):
        path = write_sweep_csv(result, tmp_path / "out" / "demo.csv", preset="fig4a")
        text = path.read_bytes().decode("utf-8")
        lines = text.split("\n")
        assert "\r" not in text
        assert lines[0] == "# preset: fig4a"
        assert "# reproduction-choice: N = 200" in lines
        header_end = max(i for i, line in enumerate(lines) if line.startswith("#"))
        assert lines[header_end + 1] == "axis,value,flags"
        assert len([line for line in lines[header_end + 2:] if line]) == 50
        assert lines[header_end + 2].endswith(",")

    def test_round_trip(self, result, tmp_path):
        path = write_sweep_csv(result, tmp_path / "demo.csv")
        rows = rows_from_frame(read_sweep_csv(path))
        assert len(rows) == len(result.rows)
        for read, written in zip(rows, result.rows):
            assert read.axis == written.axis
            assert read.flags == written.flags
            if math.isnan(written.value):
                assert math.isnan(read.value)
            else:
                assert read.value == written.value

    def test_unwritable_destination(self, result, tmp_path):
        blocker = tmp_path / "file"
        blocker.write_text("x", encoding="utf-8")
        with pytest.raises(OutputError):
            write_sweep_csv(result, blocker / "demo.csv")


class TestEmit:
    """Tests for CSV plus optional plot."""

    def test_csv_only(self, result, tmp_path):
        written = emit(result, tmp_path / "demo.csv")
        assert written == [tmp_path / "demo.csv"]

    def test_with_plot(self, result, tmp_path):
        written = emit(result, tmp_path / "demo.csv", emit_plot=True)
        assert written[1] == tmp_path / "demo.svg"
        svg = written[1].read_text(encoding="utf-8")
        assert svg.lstrip().startswith("<?xml")
        assert "<dc:date>" not in svg

    def test_plot_is_reproducible(self, result, tmp_path):
        first = emit(result, tmp_path / "a" / "demo.csv", emit_plot=True)[1]
        second = emit(result, tmp_path / "b" / "demo.csv", emit_plot=True)[1]
        assert first.read_bytes() == second.read_bytes()
