"""Rich summaries of harness rows."""

from typing import Sequence

from rich.console import Console
from rich.table import Table

from src.config.constants import TIMEOUT_STATUS
from src.models.bench import BenchRow


def _cell(row: BenchRow | None) -> str:
    if row is None:
        return "-"
    if row.status == TIMEOUT_STATUS:
        return "[yellow]timeout[/yellow]"
    ratio = f"{row.stats.ratio_pct:.1f}%"
    return ratio if row.verified else f"[red]{ratio}[/red]"


def ratio_table(rows: Sequence[BenchRow]) -> Table:
    """Higher-signature detections per reduction step, one column pair per variant.

    Each variant gets a plain and a homogenized column so the two runs of a
    benchmark sit side by side.
    """
    variants: list[str] = []
    benchmarks: list[str] = []
    cells: dict[tuple[str, str, bool], BenchRow] = {}
    for row in rows:
        label = row.config.label
        base = row.benchmark[:-2] if row.homogenized else row.benchmark
        if label not in variants:
            variants.append(label)
        if base not in benchmarks:
            benchmarks.append(base)
        cells[(base, label, row.homogenized)] = row

    table = Table(title="Higher-signature detections / reduction steps")
    table.add_column("Benchmark", style="cyan")
    for label in variants:
        table.add_column(label, justify="right")
        table.add_column(f"{label} -h", justify="right", style="dim")
    for base in benchmarks:
        values = []
        for label in variants:
            values.append(_cell(cells.get((base, label, False))))
            values.append(_cell(cells.get((base, label, True))))
        table.add_row(base, *values)
    return table


def _verdict(row: BenchRow) -> str:
    if row.verified:
        return "[green]yes[/green]"
    return "[yellow]timeout[/yellow]" if row.status == TIMEOUT_STATUS else "[red]no[/red]"


def counters_table(rows: Sequence[BenchRow]) -> Table:
    """Reduction and criteria counters per cell."""
    table = Table(title="Run statistics")
    table.add_column("Benchmark", style="cyan")
    table.add_column("Variant")
    for name in ("steps", "detections", "s-polys", "zero", "syz", "rewr", "basis", "ms"):
        table.add_column(name, justify="right")
    table.add_column("OK")
    for row in rows:
        s = row.stats
        table.add_row(
            row.benchmark,
            row.config.label,
            str(s.reduction_steps),
            str(s.higher_sig_detections),
            str(s.spoly_reductions),
            str(s.zero_reductions),
            str(s.discarded_syzygy_criterion),
            str(s.discarded_rewritable),
            str(s.basis_size_final),
            f"{s.elapsed_ms:.0f}",
            _verdict(row),
        )
    return table


def print_report(rows: Sequence[BenchRow], console: Console) -> None:
    console.print(counters_table(rows))
    console.print(ratio_table(rows))
