"""Application settings loaded from environment variables."""

from functools import lru_cache
from typing import Optional

from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application configuration using Pydantic Settings.

    Every field can be overridden with a ``GB_``-prefixed environment
    variable or a ``.env`` file (e.g. ``GB_CELL_TIMEOUT_SECONDS=60``).
    """

    model_config = SettingsConfigDict(
        env_prefix="GB_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Arithmetic defaults
    default_prime: int = 32003
    default_ordering: str = "grevlex"

    # Benchmark harness
    cell_timeout_seconds: float = 300.0
    bench_workers: int = 1
    full_scale: bool = False  # opt into the Cyclic-8 / Katsura-12 / Eco-11 grid

    # Oracle cache settings
    cache_dir: str = "data/cache"
    oracle_cache_enabled: bool = True
    oracle_cache_ttl_seconds: Optional[int] = None  # oracles never go stale

    # Logging
    log_level: str = "WARNING"


@lru_cache
def get_settings() -> Settings:
    """Get cached settings instance."""
    return Settings()
