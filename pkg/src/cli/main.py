"""Typer CLI for the Groebner basis engines."""

import logging
import sys
from enum import Enum
from pathlib import Path
from typing import Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.panel import Panel
from rich.table import Table

from src import __version__
from src.bench.harness import VARIANT_GRIDS, append_csv, parse_bench_specs, run_suite
from src.bench.report import print_report
from src.cache.oracle_cache import OracleCache
from src.config.constants import CSV_SCHEMA_VERSION, INPUT_FORMAT_VERSION, TIMEOUT_STATUS
from src.config.settings import get_settings
from src.errors import EngineTimeoutError, ExponentOverflowError, GroebnerError, NonPrimeModulusError, ParseError
from src.graph.workflow import solve as run_pipeline
from src.models.algebra import SigOrderKind
from src.models.bench import BenchRow
from src.models.engine import (
    Algorithm,
    CriteriaPreset,
    EngineConfig,
    ReducerOrder,
    RewriteFlavor,
    RunStats,
)

from .formats import format_basis, parse_input

app = typer.Typer(
    name="groebner",
    help=(
        "Signature-based Groebner bases over GF(p). "
        f"Input format v{INPUT_FORMAT_VERSION}, bench CSV schema v{CSV_SCHEMA_VERSION}."
    ),
    no_args_is_help=True,
)
console = Console()
err_console = Console(stderr=True)

EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2


class AlgChoice(str, Enum):
    SBA = "sba"
    F5 = "f5"
    BUCHBERGER = "buchberger"


class RewriteChoice(str, Enum):
    AP = "ap"
    F5 = "f5"


class VariantGrid(str, Enum):
    SINGLE = "single"
    PRESORT = "presort"
    REWRITE = "rewrite"


_ALGORITHMS = {
    AlgChoice.SBA: Algorithm.SBA,
    AlgChoice.F5: Algorithm.F5_PRESORT,
    AlgChoice.BUCHBERGER: Algorithm.BUCHBERGER_SUGAR,
}
_FLAVORS = {
    RewriteChoice.AP: RewriteFlavor.ARRI_PERRY,
    RewriteChoice.F5: RewriteFlavor.F5_RULE_LIST,
}


def _configure_logging(verbose: bool) -> None:
    level = logging.INFO if verbose else getattr(logging, get_settings().log_level.upper(), logging.WARNING)
    logging.basicConfig(
        level=level,
        format="%(message)s",
        handlers=[RichHandler(console=err_console, show_path=False)],
        force=True,
    )


def _usage_error(message: str) -> typer.Exit:
    err_console.print(f"[red]Error:[/red] {message}")
    return typer.Exit(EXIT_USAGE)


@app.command()
def solve(
    input_path: Optional[str] = typer.Argument(
        None,
        help="Input file, or '-' for stdin (omit with --bench)",
    ),
    alg: AlgChoice = typer.Option(AlgChoice.SBA, "--alg", help="Engine"),
    sig_order: SigOrderKind = typer.Option(SigOrderKind.POT, "--sig-order", help="Module ordering"),
    criteria: CriteriaPreset = typer.Option(CriteriaPreset.ALL, "--criteria", help="Signature criteria"),
    rewrite: RewriteChoice = typer.Option(RewriteChoice.AP, "--rewrite", help="Rewritable criterion flavor"),
    homogenize: bool = typer.Option(False, "--homogenize", help="Compute via the homogenized system"),
    keep_h: bool = typer.Option(False, "--keep-h", help="With --homogenize, print the homogeneous basis"),
    stats: Optional[Path] = typer.Option(None, "--stats", help="Append bench CSV row(s) to this file"),
    extended: bool = typer.Option(False, "--extended", help="Add the invariant counters to CSV rows"),
    check: bool = typer.Option(False, "--check", help="Verify the basis against the oracle"),
    bench: Optional[str] = typer.Option(
        None, "--bench", help="Run benchmarks instead, e.g. cyclic:5,katsura:6-h"
    ),
    variants: VariantGrid = typer.Option(VariantGrid.SINGLE, "--variants", help="Engine grid for --bench"),
    workers: Optional[int] = typer.Option(None, "--workers", min=1, help="Parallel bench cells"),
    timeout: Optional[float] = typer.Option(None, "--timeout", min=0.001, help="Seconds per run"),
    raw_coeffs: bool = typer.Option(False, "--raw-coeffs", help="Print coefficients in [0, p)"),
    reducer_order: ReducerOrder = typer.Option(
        ReducerOrder.INSERTION, "--reducer-order", help="Reducer scan order"
    ),
    head_only: bool = typer.Option(False, "--head-only", help="Skip tail reduction"),
    no_sig_redundant: bool = typer.Option(
        False, "--no-sig-redundant", help="Keep sig-redundant elements"
    ),
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log progress and print statistics"),
):
    """Compute a reduced Groebner basis, or run the benchmark harness with --bench.

    Example:
        groebner solve system.txt --alg sba --sig-order schreyer --check
    """
    _configure_logging(verbose)
    config = EngineConfig.with_criteria(
        criteria,
        algorithm=_ALGORITHMS[alg],
        sig_order=sig_order,
        rewrite_flavor=_FLAVORS[rewrite],
        tail_reduce=not head_only,
        sig_redundant_filter=not no_sig_redundant,
        reducer_order=reducer_order,
        timeout_seconds=None if bench else timeout,
    )

    if bench:
        _run_bench(bench, config, variants, workers, timeout, stats, extended, verbose)
        return
    if input_path is None:
        raise _usage_error("an input file (or '-') is required unless --bench is given")

    try:
        if input_path == "-":
            text, source = sys.stdin.read(), "<stdin>"
        else:
            text, source = Path(input_path).read_text(), input_path
        ring, polys = parse_input(text, source=source)
    except (ParseError, NonPrimeModulusError, ExponentOverflowError) as e:
        raise _usage_error(str(e))
    except OSError as e:
        raise _usage_error(f"cannot read {input_path}: {e}")

    if not polys:
        raise _usage_error("the input declares no polynomials")

    try:
        state = run_pipeline(polys, config, homogenize=homogenize, keep_h=keep_h, check=check)
    except EngineTimeoutError as e:
        err_console.print(f"[yellow]Timeout:[/yellow] {e}")
        raise typer.Exit(EXIT_VERIFY_FAILED)
    except GroebnerError as e:
        err_console.print(f"[red]Error:[/red] {e}")
        raise typer.Exit(EXIT_VERIFY_FAILED)

    output = format_basis(state["output_basis"], raw=raw_coeffs)
    if output:
        typer.echo(output)

    run_stats = state["stats"] or RunStats()
    if verbose:
        _print_stats(config, run_stats, state)
    if stats is not None:
        row = BenchRow(
            benchmark=Path(source).name,
            n=ring.nvars,
            homogenized=homogenize,
            config=config,
            stats=run_stats,
            verified=bool(state["verified"]),
        )
        append_csv([row], stats, extended=extended)

    if check and not state["verified"]:
        err_console.print("[red]Verification failed[/red]")
        raise typer.Exit(EXIT_VERIFY_FAILED)


def _run_bench(
    bench: str,
    config: EngineConfig,
    variants: VariantGrid,
    workers: Optional[int],
    timeout: Optional[float],
    stats: Optional[Path],
    extended: bool,
    verbose: bool,
) -> None:
    try:
        specs = parse_bench_specs(bench)
    except ValueError as e:
        raise _usage_error(str(e))

    engines = [config] if variants == VariantGrid.SINGLE else VARIANT_GRIDS[variants.value]()
    rows = run_suite(specs, engines, workers=workers, timeout=timeout)
    print_report(rows, console)
    if stats is not None:
        append_csv(rows, stats, extended=extended)
        console.print(f"\n[green]Rows appended to:[/green] {stats}")

    failed = [r for r in rows if not r.verified and r.status != TIMEOUT_STATUS]
    if failed:
        err_console.print(f"[red]{len(failed)} cell(s) failed verification[/red]")
        raise typer.Exit(EXIT_VERIFY_FAILED)


def _print_stats(config: EngineConfig, stats: RunStats, state: dict) -> None:
    table = Table(show_header=False, box=None)
    table.add_column("Counter", style="cyan")
    table.add_column("Value", justify="right")
    for name, value in stats.model_dump().items():
        table.add_row(name, f"{value:.2f}" if isinstance(value, float) else str(value))
    err_console.print(Panel(table, title=config.label, border_style="blue"))
    for event in state.get("events", []):
        err_console.print(f"[dim]{event}[/dim]")


@app.command()
def cache(
    action: str = typer.Argument(
        ...,
        help="Action: 'clear' or 'stats'",
    ),
):
    """Manage the oracle basis cache."""
    oracle_cache = OracleCache.get_instance()

    if action == "clear":
        oracle_cache.clear()
        console.print("[green]Cache cleared[/green]")
    elif action == "stats":
        cache_stats = oracle_cache.stats()
        table = Table(title="Cache Statistics")
        table.add_column("Metric", style="cyan")
        table.add_column("Value", style="green")
        table.add_row("Items", str(cache_stats["item_count"]))
        table.add_row("Size", f"{cache_stats['size_bytes'] / 1024:.1f} KB")
        table.add_row("Location", cache_stats["cache_dir"])
        console.print(table)
    else:
        console.print(f"[red]Unknown action:[/red] {action}")
        raise typer.Exit(EXIT_USAGE)


@app.command()
def version():
    """Show version and format versions."""
    console.print(
        f"groebner {__version__} (input format v{INPUT_FORMAT_VERSION}, CSV schema v{CSV_SCHEMA_VERSION})"
    )


def main():
    """Entry point for the CLI."""
    app()


if __name__ == "__main__":
    main()
