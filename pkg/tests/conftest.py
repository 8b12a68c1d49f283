"""Pytest fixtures for testing the Groebner engines."""

from pathlib import Path

import pytest

from src.algebra.coeff import PrimeField
from src.algebra.polyring import PolyRing
from src.cache.oracle_cache import OracleCache
from src.cli.formats import parse_input
from src.config.settings import get_settings
from src.models.algebra import OrderingKind

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def isolated_oracle_cache(tmp_path, monkeypatch):
    """Point the oracle cache singleton at a per-test directory."""
    monkeypatch.setenv("GB_CACHE_DIR", str(tmp_path / "cache"))
    get_settings.cache_clear()
    OracleCache.reset_instance()
    yield
    OracleCache.reset_instance()
    get_settings.cache_clear()


@pytest.fixture
def field7():
    """GF(7)."""
    return PrimeField(7)


@pytest.fixture
def ring_xy(field7):
    """GF(7)[x, y] under grevlex."""
    return PolyRing(["x", "y"], field7, OrderingKind.GREVLEX)


@pytest.fixture
def ring_xy_big():
    """GF(32003)[x, y] under grevlex."""
    return PolyRing(["x", "y"], PrimeField(32003), OrderingKind.GREVLEX)


@pytest.fixture
def ring_xyz():
    """GF(32003)[x, y, z] under grevlex."""
    return PolyRing(["x", "y", "z"], PrimeField(32003), OrderingKind.GREVLEX)


@pytest.fixture
def worked_system(ring_xy_big):
    """{x^2 - y, x*y - 1}, the running two-generator example."""
    x, y = ring_xy_big.gens
    one = ring_xy_big.constant(1)
    return [x * x - y, x * y - one]


@pytest.fixture
def worked_basis(ring_xy_big):
    """Reduced grevlex basis of :func:`worked_system`, ascending by lm."""
    x, y = ring_xy_big.gens
    one = ring_xy_big.constant(1)
    return [y * y - x, x * y - one, x * x - y]


@pytest.fixture
def cyclic4_golden():
    """Reference reduced grevlex basis of Cyclic-4 over GF(32003)."""
    _, polys = parse_input((DATA_DIR / "cyclic4_grevlex_32003.txt").read_text())
    return polys


@pytest.fixture
def system_file(tmp_path):
    """Write the two-generator example as an input file and return its path."""
    path = tmp_path / "system.txt"
    path.write_text("ring: p=32003 vars=x,y order=grevlex\n# running example\nx^2 - y\nx*y - 1\n")
    return path
