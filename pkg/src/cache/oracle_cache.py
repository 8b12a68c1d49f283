"""DiskCache wrapper for oracle (sugar engine) reduced bases."""

import logging
from pathlib import Path
from typing import Any, Optional, Sequence

from diskcache import Cache

from src.algebra.polyring import Polynomial
from src.config.settings import get_settings

from .keys import system_key

logger = logging.getLogger(__name__)


class OracleCache:
    """Cache of reduced bases so repeated suite runs skip the oracle.

    Uses DiskCache for persistent, file-based storage. Bases are stored as
    plain term tuples and rebuilt in the caller's ring on lookup.
    """

    _instance: Optional["OracleCache"] = None

    def __init__(self, cache_dir: str | None = None):
        """Initialize the cache.

        Args:
            cache_dir: Directory for cache storage. Defaults to the configured one.
        """
        settings = get_settings()

        if cache_dir is None:
            cache_dir = settings.cache_dir

        Path(cache_dir).mkdir(parents=True, exist_ok=True)

        self.cache = Cache(cache_dir)
        self.default_ttl = settings.oracle_cache_ttl_seconds

    @classmethod
    def get_instance(cls) -> "OracleCache":
        """Get or create the singleton cache instance."""
        if cls._instance is None:
            cls._instance = cls()
        return cls._instance

    @classmethod
    def reset_instance(cls) -> None:
        """Reset the singleton instance (useful for testing)."""
        if cls._instance is not None:
            cls._instance.cache.close()
            cls._instance = None

    def get(self, key: str) -> Optional[Any]:
        return self.cache.get(key)

    def set(self, key: str, value: Any, ttl: int | None = None) -> None:
        self.cache.set(key, value, expire=ttl or self.default_ttl)

    def delete(self, key: str) -> bool:
        return self.cache.delete(key)

    def get_basis(self, system: Sequence[Polynomial]) -> Optional[list[Polynomial]]:
        """Cached reduced basis of ``system``, rebuilt in its ring."""
        if not system:
            return None
        stored = self.get(system_key(system))
        if stored is None:
            return None
        ring = system[0].ring
        logger.debug(f"Oracle cache hit ({len(stored)} elements)")
        return [Polynomial(ring, tuple(terms)) for terms in stored]

    def set_basis(self, system: Sequence[Polynomial], basis: Sequence[Polynomial]) -> None:
        if not system:
            return
        self.set(system_key(system), [g.terms for g in basis])

    def clear(self) -> None:
        """Clear all cached data."""
        self.cache.clear()

    def stats(self) -> dict:
        """Get cache statistics.

        Returns:
            Dictionary with cache size and item count.
        """
        return {
            "size_bytes": self.cache.volume(),
            "item_count": len(self.cache),
            "cache_dir": str(self.cache.directory),
        }

    def close(self) -> None:
        """Close the cache connection."""
        self.cache.close()
