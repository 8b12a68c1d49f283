"""Unit tests for the oracle cache."""

from src.bench.generators import gen_cyclic
from src.bench.harness import oracle_basis
from src.cache.keys import system_key
from src.cache.oracle_cache import OracleCache


class TestSystemKey:
    """Tests for cache key generation."""

    def test_stable_and_prefixed(self, worked_system):
        key = system_key(worked_system)
        assert key.startswith("oracle:")
        assert key == system_key(list(worked_system))

    def test_distinguishes_systems(self, worked_system):
        assert system_key(worked_system) != system_key(worked_system[:1])
        assert system_key(worked_system) != system_key(list(reversed(worked_system)))

    def test_distinguishes_orderings(self, worked_system):
        lex = worked_system[0].ring.with_ordering("lex")
        assert system_key(worked_system) != system_key([f.set_ring(lex) for f in worked_system])

    def test_empty(self):
        assert system_key([]) == "oracle:empty"


class TestOracleCache:
    """Tests for the DiskCache wrapper."""

    def test_singleton_uses_configured_dir(self, tmp_path):
        cache = OracleCache.get_instance()
        assert cache is OracleCache.get_instance()
        assert cache.stats()["cache_dir"] == str(tmp_path / "cache")

    def test_basis_roundtrip(self, tmp_path, worked_system, worked_basis):
        cache = OracleCache(cache_dir=str(tmp_path / "local"))
        assert cache.get_basis(worked_system) is None
        cache.set_basis(worked_system, worked_basis)
        assert cache.get_basis(worked_system) == worked_basis
        assert cache.stats()["item_count"] == 1
        cache.clear()
        assert cache.get_basis(worked_system) is None
        cache.close()

    def test_empty_system_not_stored(self, tmp_path):
        cache = OracleCache(cache_dir=str(tmp_path / "local"))
        cache.set_basis([], [])
        assert cache.get_basis([]) is None
        assert cache.stats()["item_count"] == 0
        cache.close()

    def test_oracle_basis_fills_cache(self):
        system = gen_cyclic(4)
        first = oracle_basis(system, use_cache=True)
        assert len(first) == 7
        cache = OracleCache.get_instance()
        assert cache.get_basis(system) == first
        assert oracle_basis(system, use_cache=True) == first

    def test_oracle_basis_without_cache(self):
        system = gen_cyclic(4)
        assert len(oracle_basis(system, use_cache=False)) == 7
        assert OracleCache.get_instance().stats()["item_count"] == 0
