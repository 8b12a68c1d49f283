"""Pydantic models for benchmark definitions and harness rows."""

from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.config.constants import (
    CSV_COLUMNS,
    CSV_EXTENDED_COLUMNS,
    DEFAULT_PRIME,
    MIN_FAMILY_SIZE,
)

from .algebra import OrderingKind
from .engine import EngineConfig, RunStats


class BenchmarkFamily(str, Enum):
    """Source of a benchmark system."""

    CYCLIC = "cyclic"
    KATSURA = "katsura"
    ECO = "eco"
    FILE = "file"


class BenchmarkSpec(BaseModel):
    """One benchmark system, optionally homogenized."""

    model_config = ConfigDict(frozen=True)

    family: BenchmarkFamily
    n: int = Field(default=0, ge=0, description="Size parameter (ignored for files)")
    homogenized: bool = False
    p: int = Field(default=DEFAULT_PRIME, description="Prime field modulus")
    ordering: OrderingKind = OrderingKind.GREVLEX
    path: Optional[str] = Field(default=None, description="Input file for the file family")

    @model_validator(mode="after")
    def _check_size(self) -> "BenchmarkSpec":
        if self.family == BenchmarkFamily.FILE:
            if not self.path:
                raise ValueError("file benchmarks need a path")
            return self
        minimum = MIN_FAMILY_SIZE[self.family.value]
        if self.n < minimum:
            raise ValueError(f"{self.family.value} needs n >= {minimum}, got {self.n}")
        return self

    @property
    def name(self) -> str:
        """Row label such as ``cyclic-5`` or ``katsura-6-h``."""
        if self.family == BenchmarkFamily.FILE:
            base = f"file:{self.path}"
        else:
            base = f"{self.family.value}-{self.n}"
        return f"{base}-h" if self.homogenized else base


class BenchRow(BaseModel):
    """One harness cell: a benchmark run by one engine variant."""

    benchmark: str
    n: int
    homogenized: bool
    config: EngineConfig
    stats: RunStats
    verified: bool = False
    status: str = "OK"

    def values(self, extended: bool = False) -> list:
        """Cell values in CSV column order."""
        s = self.stats
        cfg = self.config
        row = {
            "benchmark": self.benchmark,
            "n": self.n,
            "homogenized": str(self.homogenized).lower(),
            "algorithm": cfg.algorithm.value,
            "sig_order": cfg.sig_order.value,
            "criteria": cfg.criteria.value,
            "ratio_pct": f"{s.ratio_pct:.4f}",
            "verified": str(self.verified).lower(),
            "elapsed_ms": f"{s.elapsed_ms:.3f}",
            "rewrite_flavor": cfg.rewrite_flavor.value,
            "status": self.status,
        }
        columns = CSV_COLUMNS + CSV_EXTENDED_COLUMNS if extended else CSV_COLUMNS
        return [row[c] if c in row else getattr(s, c) for c in columns]
