"""End-to-end tests for the groebner CLI."""

from typer.testing import CliRunner

from src.bench.generators import gen_cyclic
from src.cli.formats import format_input
from src.cli.main import app
from src.config.constants import CSV_HEADER_COMMENT

runner = CliRunner()

WORKED_OUTPUT = "y^2 - x\nx*y - 1\nx^2 - y"


class TestSolve:
    """Tests for the solve command on input files."""

    def test_prints_reduced_basis(self, system_file):
        result = runner.invoke(app, ["solve", str(system_file)])
        assert result.exit_code == 0
        assert WORKED_OUTPUT in result.stdout

    def test_reads_stdin(self, system_file):
        result = runner.invoke(app, ["solve", "-"], input=system_file.read_text())
        assert result.exit_code == 0
        assert WORKED_OUTPUT in result.stdout

    def test_every_engine_with_check(self, system_file):
        for alg in ("sba", "f5", "buchberger"):
            for order in ("pot", "schreyer"):
                result = runner.invoke(
                    app, ["solve", str(system_file), "--alg", alg, "--sig-order", order, "--check"]
                )
                assert result.exit_code == 0, (alg, order)
                assert WORKED_OUTPUT in result.stdout

    def test_homogenize_keep_h(self, system_file):
        result = runner.invoke(app, ["solve", str(system_file), "--homogenize", "--keep-h", "--check"])
        assert result.exit_code == 0
        assert "h" in result.stdout

    def test_raw_coefficients(self, system_file):
        result = runner.invoke(app, ["solve", str(system_file), "--raw-coeffs"])
        assert result.exit_code == 0
        assert "x*y + 32002" in result.stdout

    def test_parse_error(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("ring: p=32003 vars=x,y\nx^2 - z\n")
        result = runner.invoke(app, ["solve", str(path)])
        assert result.exit_code == 2

    def test_exponent_out_of_range(self, tmp_path):
        path = tmp_path / "wide.txt"
        path.write_text("ring: p=7 vars=x,y order=grevlex\nx^70000 + y\n")
        result = runner.invoke(app, ["solve", str(path)])
        assert result.exit_code == 2
        assert result.exception is None or isinstance(result.exception, SystemExit)

    def test_non_prime_modulus(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("ring: p=32004 vars=x,y\nx - y\n")
        assert runner.invoke(app, ["solve", str(path)]).exit_code == 2

    def test_missing_input(self, tmp_path):
        assert runner.invoke(app, ["solve"]).exit_code == 2
        assert runner.invoke(app, ["solve", str(tmp_path / "nope.txt")]).exit_code == 2

    def test_timeout(self, tmp_path):
        system = gen_cyclic(5)
        path = tmp_path / "cyclic5.txt"
        path.write_text(format_input(system[0].ring, system))
        result = runner.invoke(app, ["solve", str(path), "--timeout", "0.001"])
        assert result.exit_code == 1

    def test_stats_csv(self, system_file, tmp_path):
        out = tmp_path / "stats.csv"
        for _ in range(2):
            result = runner.invoke(app, ["solve", str(system_file), "--stats", str(out), "--check"])
            assert result.exit_code == 0
        lines = out.read_text().splitlines()
        assert lines[0] == CSV_HEADER_COMMENT
        assert lines[1].startswith("benchmark,n,homogenized")
        assert len(lines) == 4
        assert lines[2].startswith("system.txt,2,false,sba,pot,all,")


class TestBench:
    """Tests for solve --bench."""

    def test_bench_writes_csv(self, tmp_path):
        out = tmp_path / "bench.csv"
        result = runner.invoke(
            app,
            ["solve", "--bench", "cyclic:4,katsura:3-h", "--workers", "1", "--stats", str(out), "--extended"],
        )
        assert result.exit_code == 0
        lines = out.read_text().splitlines()
        assert len(lines) == 4
        assert lines[2].startswith("cyclic-4,4,false,sba,")
        assert lines[3].startswith("katsura-3-h,3,true,sba,")
        assert lines[2].endswith(",OK")

    def test_bench_variant_grid(self):
        result = runner.invoke(app, ["solve", "--bench", "cyclic:4", "--variants", "presort", "--workers", "1"])
        assert result.exit_code == 0

    def test_bad_bench_item(self):
        result = runner.invoke(app, ["solve", "--bench", "cyclic:x"])
        assert result.exit_code == 2


class TestCacheCommand:
    """Tests for the cache command."""

    def test_stats_and_clear(self):
        assert runner.invoke(app, ["cache", "stats"]).exit_code == 0
        assert runner.invoke(app, ["cache", "clear"]).exit_code == 0

    def test_unknown_action(self):
        assert runner.invoke(app, ["cache", "bogus"]).exit_code == 2


class TestVersion:
    def test_version(self):
        result = runner.invoke(app, ["version"])
        assert result.exit_code == 0
        assert "0.1.0" in result.stdout
