"""Base engine class shared by the signature engines and the sugar oracle."""

import logging
import time
from abc import ABC, abstractmethod
from typing import NamedTuple, Optional, Sequence, Type

from src.algebra.polyring import Polynomial
from src.errors import EngineTimeoutError, RingMismatchError
from src.models.engine import Algorithm, EngineConfig, RunStats, TraceEntry

logger = logging.getLogger(__name__)


class GrobnerResult(NamedTuple):
    """Reduced basis, statistics and the processed-pair trace of a run."""

    basis: list[Polynomial]
    stats: RunStats
    trace: list[TraceEntry]


class BaseEngine(ABC):
    """Abstract base class for all engines.

    Handles input normalization, the cooperative deadline, timing and the
    final interreduction; subclasses implement :meth:`_compute`.
    """

    # Subclasses set this to their algorithm
    algorithm: Algorithm = Algorithm.SBA

    def __init__(self, config: Optional[EngineConfig] = None):
        self.config = config or EngineConfig(algorithm=self.algorithm)
        self.stats = RunStats()
        self.trace: list[TraceEntry] = []
        self._deadline: Optional[float] = None
        self._started = 0.0

    def run(self, F: Sequence[Polynomial]) -> GrobnerResult:
        """Compute the reduced Groebner basis of ``F``."""
        from .interreduce import interreduce

        polys = self._prepare(F)
        self.stats = RunStats(homogeneous_input=all(f.is_homogeneous for f in polys))
        self.trace = []
        self._started = time.perf_counter()
        if self.config.timeout_seconds is not None:
            self._deadline = self._started + self.config.timeout_seconds

        logger.info(f"{self.config.label}: starting on {len(polys)} generators")
        basis = self._compute(polys) if polys else []
        reduced = interreduce(basis)

        self.stats.basis_size_final = len(reduced)
        self.stats.elapsed_ms = (time.perf_counter() - self._started) * 1000.0
        logger.info(
            f"{self.config.label}: {len(reduced)} basis elements, "
            f"{self.stats.reduction_steps} reduction steps in {self.stats.elapsed_ms:.1f} ms"
        )
        return GrobnerResult(reduced, self.stats, self.trace)

    def _prepare(self, F: Sequence[Polynomial]) -> list[Polynomial]:
        if not F:
            raise ValueError("the input system is empty")
        ring = F[0].ring
        for f in F:
            if f.ring != ring:
                raise RingMismatchError(f"mixed rings {ring} and {f.ring}")
        polys = [f for f in F if f]
        if len(polys) < len(F):
            logger.warning(f"Dropped {len(F) - len(polys)} zero input polynomial(s)")
        return polys

    def check_deadline(self) -> None:
        """Raise :class:`EngineTimeoutError` once the configured deadline passed."""
        if self._deadline is None:
            return
        now = time.perf_counter()
        if now > self._deadline:
            elapsed = now - self._started
            logger.warning(f"{self.config.label}: timed out after {elapsed:.1f}s")
            raise EngineTimeoutError(elapsed, self.config.timeout_seconds or 0.0)

    @abstractmethod
    def _compute(self, F: list[Polynomial]) -> list[Polynomial]:
        """Return a (not necessarily reduced) Groebner basis of nonzero ``F``."""


def create_engine(config: EngineConfig) -> BaseEngine:
    """Factory function to create the engine a config asks for."""
    from .buchberger import BuchbergerSugarEngine
    from .f5 import F5PresortEngine
    from .sba import SBAEngine

    engines: dict[Algorithm, Type[BaseEngine]] = {
        Algorithm.SBA: SBAEngine,
        Algorithm.F5_PRESORT: F5PresortEngine,
        Algorithm.BUCHBERGER_SUGAR: BuchbergerSugarEngine,
    }
    return engines[config.algorithm](config)


def compute_basis(F: Sequence[Polynomial], config: Optional[EngineConfig] = None) -> GrobnerResult:
    """Run the configured engine on ``F``."""
    return create_engine(config or EngineConfig()).run(F)
