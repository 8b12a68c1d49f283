"""Standard benchmark systems: Cyclic-n, Katsura-n and Eco-n."""

from pathlib import Path
from typing import Optional

from src.algebra.coeff import PrimeField
from src.algebra.homogenize import homogenize
from src.algebra.polyring import Monomial, Polynomial, PolyRing
from src.config.constants import DEFAULT_PRIME, MIN_FAMILY_SIZE
from src.models.algebra import OrderingKind
from src.models.bench import BenchmarkFamily, BenchmarkSpec


def _ring(names: list[str], p: int, ordering: OrderingKind | str) -> PolyRing:
    return PolyRing(names, PrimeField(p), ordering)


def _check_size(family: str, n: int) -> None:
    if n < MIN_FAMILY_SIZE[family]:
        raise ValueError(f"{family} needs n >= {MIN_FAMILY_SIZE[family]}, got {n}")


def gen_cyclic(
    n: int, p: int = DEFAULT_PRIME, ordering: OrderingKind | str = OrderingKind.GREVLEX
) -> list[Polynomial]:
    """Cyclic-n in x1..xn: the cyclic elementary sums s_1..s_{n-1} and x1...xn - 1."""
    _check_size("cyclic", n)
    ring = _ring([f"x{i}" for i in range(1, n + 1)], p, ordering)
    polys = []
    for k in range(1, n):
        acc: dict[Monomial, int] = {}
        for i in range(n):
            exps = [0] * n
            for j in range(i, i + k):
                exps[j % n] += 1
            m = ring.monomial(exps)
            acc[m] = acc.get(m, 0) + 1
        polys.append(ring.from_dict(acc))
    polys.append(ring.from_terms([([1] * n, 1), ([0] * n, -1)]))
    return polys


def gen_katsura(
    n: int, p: int = DEFAULT_PRIME, ordering: OrderingKind | str = OrderingKind.GREVLEX
) -> list[Polynomial]:
    """Katsura-n in u0..un: n quadratic equations and one linear equation."""
    _check_size("katsura", n)
    ring = _ring([f"u{i}" for i in range(n + 1)], p, ordering)
    u = ring.gens

    def var(i: int) -> Optional[Polynomial]:
        i = abs(i)
        return u[i] if i <= n else None

    polys = []
    for m in range(n):
        total = ring.zero() - u[m]
        for k in range(-n, n + 1):
            a, b = var(k), var(m - k)
            if a is not None and b is not None:
                total = total + a * b
        polys.append(total)
    linear = ring.constant(-1)
    for k in range(-n, n + 1):
        linear = linear + u[abs(k)]
    polys.append(linear)
    return polys


def gen_eco(
    n: int, p: int = DEFAULT_PRIME, ordering: OrderingKind | str = OrderingKind.GREVLEX
) -> list[Polynomial]:
    """Eco-n in x1..xn: n-2 cubic equations and one linear equation."""
    _check_size("eco", n)
    ring = _ring([f"x{i}" for i in range(1, n + 1)], p, ordering)
    x = ring.gens  # x[0] is x1
    polys = []
    for k in range(1, n - 1):
        inner = x[k - 1]
        for i in range(1, n - k):
            inner = inner + x[i - 1] * x[i + k - 1]
        polys.append(inner * x[n - 1] - ring.constant(k))
    linear = ring.constant(1)
    for i in range(n - 1):
        linear = linear + x[i]
    polys.append(linear)
    return polys


GENERATORS = {
    BenchmarkFamily.CYCLIC: gen_cyclic,
    BenchmarkFamily.KATSURA: gen_katsura,
    BenchmarkFamily.ECO: gen_eco,
}


def build_system(spec: BenchmarkSpec) -> list[Polynomial]:
    """Polynomials of a benchmark, homogenized when the spec asks for it."""
    if spec.family == BenchmarkFamily.FILE:
        from src.cli.formats import parse_input

        _, polys = parse_input(Path(spec.path).read_text(), source=spec.path)
    else:
        polys = GENERATORS[spec.family](spec.n, spec.p, spec.ordering)
    return homogenize(polys) if spec.homogenized else polys
