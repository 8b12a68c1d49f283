"""Integration tests for the benchmark harness and its CSV output."""

import csv
import io

import pytest
from rich.console import Console

from src.bench import harness
from src.bench.generators import build_system, gen_cyclic
from src.bench.harness import (
    acceptance_variants,
    append_csv,
    default_grid,
    oracle_basis,
    parse_bench_specs,
    rewrite_variants,
    run_cell,
    run_suite,
    write_csv,
)
from src.bench.report import print_report
from src.config.constants import CSV_COLUMNS, CSV_EXTENDED_COLUMNS, CSV_HEADER_COMMENT, TIMEOUT_STATUS
from src.engines.verify import verify_groebner
from src.errors import EngineTimeoutError
from src.models.algebra import SigOrderKind
from src.models.bench import BenchmarkSpec
from src.models.engine import Algorithm, EngineConfig

CYCLIC4 = BenchmarkSpec(family="cyclic", n=4)


def _read_rows(text):
    lines = text.splitlines()
    assert lines[0] == CSV_HEADER_COMMENT
    return list(csv.DictReader(lines[1:]))


class TestGrids:
    """Tests for the benchmark and variant grids."""

    def test_parse_bench_specs(self):
        specs = parse_bench_specs("cyclic:5, eco:6-h,katsura:4")
        assert [s.name for s in specs] == ["cyclic-5", "eco-6-h", "katsura-4"]
        assert all(s.p == 32003 for s in specs)

    @pytest.mark.parametrize("text", ["", "cyclic", "cyclic:x", "foo:3", "cyclic:5h"])
    def test_parse_bench_specs_rejects(self, text):
        with pytest.raises(ValueError):
            parse_bench_specs(text)

    def test_default_grid(self):
        grid = default_grid(full_scale=False)
        assert len(grid) == 24
        assert sum(s.homogenized for s in grid) == 12
        assert {s.name for s in default_grid(full_scale=True)} >= {"cyclic-8", "katsura-12-h", "eco-11"}

    def test_variants(self):
        labels = [c.label for c in acceptance_variants()]
        assert labels == [
            "sba/pot/all/ap",
            "sba/schreyer/all/ap",
            "f5_presort/pot/all/ap",
            "f5_presort/schreyer/all/ap",
        ]
        assert [c.label for c in rewrite_variants()] == [
            "sba/pot/all/f5",
            "sba/schreyer/all/f5",
            "f5_presort/pot/all/f5",
            "f5_presort/schreyer/all/f5",
            "sba/pot/all/ap",
            "sba/schreyer/all/ap",
        ]


class TestRunCell:
    """Tests for single harness cells."""

    def test_cyclic4(self):
        row = run_cell(CYCLIC4, EngineConfig(sig_order=SigOrderKind.SCHREYER), use_cache=False)
        assert row.verified
        assert row.status == "OK"
        assert row.stats.basis_size_final == 7
        assert row.benchmark == "cyclic-4"

    def test_timeout_row(self):
        row = run_cell(BenchmarkSpec(family="cyclic", n=6), EngineConfig(), timeout=0.001, use_cache=False)
        assert row.status == TIMEOUT_STATUS
        assert not row.verified
        assert row.config.timeout_seconds == 0.001

    def test_oracle_timeout_keeps_engine_stats(self, monkeypatch):
        def slow_oracle(system, use_cache=None, timeout=None):
            assert timeout is not None and 0 < timeout <= 60
            raise EngineTimeoutError(1.0, 1.0)

        monkeypatch.setattr(harness, "oracle_basis", slow_oracle)
        row = run_cell(CYCLIC4, EngineConfig(), timeout=60, use_cache=False)
        assert row.status == TIMEOUT_STATUS
        assert not row.verified
        assert row.stats.basis_size_final == 7

    def test_oracle_honours_timeout(self):
        system = build_system(BenchmarkSpec(family="cyclic", n=6))
        with pytest.raises(EngineTimeoutError):
            oracle_basis(system, use_cache=False, timeout=0.001)

    def test_verification_honours_timeout(self, cyclic4_golden):
        with pytest.raises(EngineTimeoutError):
            verify_groebner(cyclic4_golden, gen_cyclic(4), timeout_seconds=1e-9)
        assert verify_groebner(cyclic4_golden, gen_cyclic(4), timeout_seconds=60)

    def test_deterministic_counters(self):
        a = run_cell(CYCLIC4, EngineConfig(), use_cache=False)
        b = run_cell(CYCLIC4, EngineConfig(), use_cache=True)
        assert a.stats.deterministic_view() == b.stats.deterministic_view()
        assert a.values()[:-1] == b.values()[:-1]


class TestRunSuite:
    """Tests for whole suites."""

    def test_rows_in_grid_order(self):
        specs = [CYCLIC4, BenchmarkSpec(family="katsura", n=3, homogenized=True)]
        engines = [EngineConfig(), EngineConfig(algorithm=Algorithm.BUCHBERGER_SUGAR)]
        rows = run_suite(specs, engines, workers=1, timeout=60, use_cache=False)
        assert [(r.benchmark, r.config.algorithm.value) for r in rows] == [
            ("cyclic-4", "sba"),
            ("cyclic-4", "buchberger_sugar"),
            ("katsura-3-h", "sba"),
            ("katsura-3-h", "buchberger_sugar"),
        ]
        assert all(r.verified for r in rows)

    def test_report_renders(self):
        rows = run_suite([CYCLIC4], acceptance_variants(), workers=1, timeout=60, use_cache=False)
        out = io.StringIO()
        print_report(rows, Console(file=out, width=240))
        text = out.getvalue()
        assert "cyclic-4" in text
        assert "sba/pot/all/ap" in text


class TestCsv:
    """Tests for the CSV writer."""

    def test_columns(self):
        row = run_cell(CYCLIC4, EngineConfig(), use_cache=False)
        out = io.StringIO()
        write_csv([row], out)
        (parsed,) = _read_rows(out.getvalue())
        assert tuple(parsed) == CSV_COLUMNS
        assert parsed["benchmark"] == "cyclic-4"
        assert parsed["verified"] == "true"
        assert parsed["basis_size_final"] == "7"
        assert parsed["criteria"] == "all"

    def test_extended_columns(self):
        row = run_cell(CYCLIC4, EngineConfig(), use_cache=False)
        out = io.StringIO()
        write_csv([row], out, extended=True)
        (parsed,) = _read_rows(out.getvalue())
        assert tuple(parsed) == CSV_COLUMNS + CSV_EXTENDED_COLUMNS
        assert parsed["status"] == "OK"
        assert parsed["signature_order_violations"] == "0"

    def test_append_writes_header_once(self, tmp_path):
        path = tmp_path / "bench.csv"
        row = run_cell(CYCLIC4, EngineConfig(), use_cache=False)
        append_csv([row], path)
        append_csv([row, row], path)
        text = path.read_text()
        assert text.count(CSV_HEADER_COMMENT) == 1
        assert len(_read_rows(text)) == 3
