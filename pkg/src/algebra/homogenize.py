"""Homogenization with a trailing variable and the inverse substitution h = 1."""

import logging
from typing import Sequence

from src.config.constants import HOMOGENIZING_VARIABLE
from src.errors import DehomogenizationError, RingMismatchError

from .polyring import Monomial, Polynomial, PolyRing

logger = logging.getLogger(__name__)


def homogenizing_ring(ring: PolyRing) -> PolyRing:
    """The ring with one extra variable appended last.

    Appended last, the new variable is the smallest one under grevlex.
    """
    if ring.homogenizing:
        raise RingMismatchError(f"{ring} is already homogenized")
    name = HOMOGENIZING_VARIABLE
    while name in ring.names:
        name += "_"
    if name != HOMOGENIZING_VARIABLE:
        logger.warning(f"Variable '{HOMOGENIZING_VARIABLE}' is taken; homogenizing with '{name}'")
    return PolyRing(ring.names + (name,), ring.field, ring.ordering, homogenizing=True)


def base_ring(ring: PolyRing) -> PolyRing:
    """Drop the homogenizing variable again."""
    if not ring.homogenizing:
        raise DehomogenizationError(f"{ring} has no homogenizing variable")
    return PolyRing(ring.names[:-1], ring.field, ring.ordering)


def _common_ring(polys: Sequence[Polynomial]) -> PolyRing:
    ring = polys[0].ring
    for f in polys[1:]:
        if f.ring != ring:
            raise RingMismatchError(f"mixed rings {ring} and {f.ring}")
    return ring


def homogenize_poly(f: Polynomial, target: PolyRing) -> Polynomial:
    d = f.deg
    acc: dict[Monomial, int] = {}
    for m, c in f.terms:
        acc[(d,) + m[1:] + (d - m[0],)] = c
    return target.from_dict(acc)


def dehomogenize_poly(g: Polynomial, target: PolyRing) -> Polynomial:
    p = target.p
    acc: dict[Monomial, int] = {}
    for m, c in g.terms:
        dm = (m[0] - m[-1],) + m[1:-1]
        acc[dm] = (acc.get(dm, 0) + c) % p
    return target.from_dict(acc)


def homogenize(F: Sequence[Polynomial]) -> list[Polynomial]:
    """Pad every term of each polynomial up to its total degree with ``h``."""
    if not F:
        return []
    target = homogenizing_ring(_common_ring(F))
    return [homogenize_poly(f, target) for f in F]


def dehomogenize(G: Sequence[Polynomial]) -> list[Polynomial]:
    """Substitute h = 1 and merge the resulting terms."""
    if not G:
        return []
    target = base_ring(_common_ring(G))
    return [dehomogenize_poly(g, target) for g in G]
