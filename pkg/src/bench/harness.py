"""Benchmark harness: runs engine variants over benchmark grids and emits CSV rows."""

import csv
import logging
import re
import time
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterable, Optional, Sequence, TextIO

from src.algebra.polyring import Polynomial
from src.cache.oracle_cache import OracleCache
from src.config.constants import (
    CSV_COLUMNS,
    CSV_EXTENDED_COLUMNS,
    CSV_HEADER_COMMENT,
    DESK_GRID,
    FULL_GRID,
    TIMEOUT_STATUS,
)
from src.config.settings import get_settings
from src.engines.base import create_engine
from src.engines.buchberger import buchberger_sugar
from src.engines.verify import verify_groebner
from src.errors import EngineTimeoutError
from src.models.algebra import SigOrderKind
from src.models.bench import BenchmarkFamily, BenchmarkSpec, BenchRow
from src.models.engine import Algorithm, EngineConfig, RewriteFlavor, RunStats

from .generators import build_system

logger = logging.getLogger(__name__)


# ============================================================================
# Grids
# ============================================================================


def acceptance_variants() -> list[EngineConfig]:
    """sba and f5_presort under POT and Schreyer, both criteria, Arri-Perry rewriting."""
    return [
        EngineConfig(algorithm=algorithm, sig_order=order)
        for algorithm in (Algorithm.SBA, Algorithm.F5_PRESORT)
        for order in (SigOrderKind.POT, SigOrderKind.SCHREYER)
    ]


def rewrite_variants() -> list[EngineConfig]:
    """F5 rule list (signature-ordered and presorted) and Arri-Perry under POT and Schreyer."""
    orders = (SigOrderKind.POT, SigOrderKind.SCHREYER)
    rule_list = [
        EngineConfig(algorithm=algorithm, sig_order=order, rewrite_flavor=RewriteFlavor.F5_RULE_LIST)
        for algorithm in (Algorithm.SBA, Algorithm.F5_PRESORT)
        for order in orders
    ]
    return rule_list + [EngineConfig(sig_order=order) for order in orders]


VARIANT_GRIDS = {
    "presort": acceptance_variants,
    "rewrite": rewrite_variants,
}


def default_grid(full_scale: Optional[bool] = None) -> list[BenchmarkSpec]:
    """Every family and size of the configured grid, plain and homogenized."""
    if full_scale is None:
        full_scale = get_settings().full_scale
    grid = FULL_GRID if full_scale else DESK_GRID
    return [
        BenchmarkSpec(family=BenchmarkFamily(family), n=n, homogenized=h)
        for family, sizes in grid.items()
        for n in sizes
        for h in (False, True)
    ]


_BENCH_ITEM = re.compile(r"^(cyclic|katsura|eco):(\d+)(-h)?$")


def parse_bench_specs(text: str, p: Optional[int] = None) -> list[BenchmarkSpec]:
    """Parse ``family:n[-h]`` items separated by commas, e.g. ``cyclic:5,eco:6-h``."""
    p = p or get_settings().default_prime
    specs = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        match = _BENCH_ITEM.match(item)
        if match is None:
            raise ValueError(f"bad benchmark item '{item}' (expected family:n or family:n-h)")
        specs.append(
            BenchmarkSpec(
                family=BenchmarkFamily(match.group(1)),
                n=int(match.group(2)),
                homogenized=bool(match.group(3)),
                p=p,
            )
        )
    if not specs:
        raise ValueError("no benchmarks given")
    return specs


# ============================================================================
# Running cells
# ============================================================================


def oracle_basis(
    system: Sequence[Polynomial],
    use_cache: Optional[bool] = None,
    timeout: Optional[float] = None,
) -> list[Polynomial]:
    """Reduced basis from the sugar engine, through the oracle cache when enabled.

    ``timeout`` bounds the sugar engine run; a cached basis is returned
    regardless of it.
    """
    if use_cache is None:
        use_cache = get_settings().oracle_cache_enabled
    cache = OracleCache.get_instance() if use_cache else None
    if cache is not None:
        cached = cache.get_basis(system)
        if cached is not None:
            return cached
    config = EngineConfig(algorithm=Algorithm.BUCHBERGER_SUGAR, timeout_seconds=timeout)
    basis = buchberger_sugar(system, config=config).basis
    if cache is not None:
        cache.set_basis(system, basis)
    return basis


def _remaining(started: float, timeout: Optional[float]) -> Optional[float]:
    """Seconds left of the cell budget; raises once it is used up."""
    if timeout is None:
        return None
    elapsed = time.perf_counter() - started
    if elapsed >= timeout:
        raise EngineTimeoutError(elapsed, timeout)
    return timeout - elapsed


def run_cell(
    spec: BenchmarkSpec,
    config: EngineConfig,
    timeout: Optional[float] = None,
    use_cache: Optional[bool] = None,
) -> BenchRow:
    """Run one engine on one benchmark and check it against the oracle.

    ``timeout`` covers the whole cell: the engine run, the oracle and the
    verification. Running out of it at any stage yields a TIMEOUT row.
    """
    if timeout is not None:
        config = config.model_copy(update={"timeout_seconds": timeout})
    system = build_system(spec)
    logger.info(f"{spec.name} x {config.label}")

    started = time.perf_counter()
    stats: Optional[RunStats] = None
    try:
        result = create_engine(config).run(system)
        stats = result.stats
        oracle = oracle_basis(system, use_cache, timeout=_remaining(started, timeout))
        verified = result.basis == oracle and verify_groebner(
            result.basis, system, oracle=oracle, timeout_seconds=_remaining(started, timeout)
        )
    except EngineTimeoutError as e:
        stage = "engine" if stats is None else "verification"
        logger.warning(f"{spec.name} x {config.label}: {stage} timed out after {e.elapsed_seconds:.1f}s")
        if stats is None:
            stats = RunStats(elapsed_ms=e.elapsed_seconds * 1000.0)
        return BenchRow(
            benchmark=spec.name,
            n=spec.n,
            homogenized=spec.homogenized,
            config=config,
            stats=stats,
            status=TIMEOUT_STATUS,
        )

    if not verified:
        logger.warning(f"{spec.name} x {config.label}: basis does not match the oracle")
    return BenchRow(
        benchmark=spec.name,
        n=spec.n,
        homogenized=spec.homogenized,
        config=config,
        stats=stats,
        verified=verified,
    )


def _run_cell_args(args: tuple) -> BenchRow:
    return run_cell(*args)


def run_suite(
    specs: Sequence[BenchmarkSpec],
    engines: Sequence[EngineConfig],
    workers: Optional[int] = None,
    timeout: Optional[float] = None,
    use_cache: Optional[bool] = None,
) -> list[BenchRow]:
    """Run every (benchmark, engine) cell; rows come back in grid order.

    A cell that exceeds ``timeout`` yields a TIMEOUT row instead of
    aborting the suite.
    """
    settings = get_settings()
    workers = workers or settings.bench_workers
    if timeout is None:
        timeout = settings.cell_timeout_seconds
    cells = [(spec, config, timeout, use_cache) for spec in specs for config in engines]
    logger.info(f"Running {len(cells)} cells with {workers} worker(s)")

    if workers > 1 and len(cells) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(_run_cell_args, cells))
    return [_run_cell_args(cell) for cell in cells]


# ============================================================================
# CSV output
# ============================================================================


def write_csv(rows: Iterable[BenchRow], out: TextIO, extended: bool = False, header: bool = True) -> None:
    """Write rows in the fixed column order, after the versioned header comment."""
    writer = csv.writer(out, lineterminator="\n")
    if header:
        out.write(CSV_HEADER_COMMENT + "\n")
        writer.writerow(CSV_COLUMNS + CSV_EXTENDED_COLUMNS if extended else CSV_COLUMNS)
    for row in rows:
        writer.writerow(row.values(extended))


def append_csv(rows: Iterable[BenchRow], path: str | Path, extended: bool = False) -> None:
    """Append rows to ``path``, writing the header only into a new or empty file."""
    path = Path(path)
    fresh = not path.exists() or path.stat().st_size == 0
    if not fresh:
        with path.open() as f:
            first = f.readline().strip()
        if first != CSV_HEADER_COMMENT:
            logger.warning(f"{path} does not start with '{CSV_HEADER_COMMENT}'; appending anyway")
    with path.open("a", newline="") as f:
        write_csv(rows, f, extended=extended, header=fresh)
