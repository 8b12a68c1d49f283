"""Independent verification that a basis is a Groebner basis of an input system."""

import logging
import time
from typing import Optional, Sequence

from src.algebra.polyring import Polynomial, mono_is_coprime
from src.errors import EngineTimeoutError, RingMismatchError
from src.models.algebra import OrderingKind
from src.models.engine import Algorithm, EngineConfig

from .normal_form import plain_spoly, reduces_to_zero

logger = logging.getLogger(__name__)


def verify_groebner(
    G: Sequence[Polynomial],
    F: Sequence[Polynomial],
    ord: Optional[OrderingKind | str] = None,
    oracle: Optional[Sequence[Polynomial]] = None,
    timeout_seconds: Optional[float] = None,
) -> bool:
    """Check that ``G`` is a Groebner basis of the ideal generated by ``F``.

    Three checks, all by plain reduction: every s-polynomial of ``G``
    reduces to zero modulo ``G``; every ``f`` in ``F`` reduces to zero modulo
    ``G``; every ``g`` in ``G`` reduces to zero modulo the oracle basis of
    ``F`` (computed with the sugar engine unless ``oracle`` is given).
    Pairs with coprime leading monomials are skipped; their s-polynomials
    always reduce to zero.

    With ``timeout_seconds`` the check raises :class:`EngineTimeoutError`
    once that much time has passed; the limit also bounds the oracle run.
    """
    started = time.perf_counter()

    def check_deadline() -> None:
        if timeout_seconds is None:
            return
        elapsed = time.perf_counter() - started
        if elapsed > timeout_seconds:
            raise EngineTimeoutError(elapsed, timeout_seconds)

    G = [g for g in G if g]
    F = [f for f in F if f]
    if not F:
        return not G
    if not G:
        logger.info("verification failed: empty basis for a nonzero ideal")
        return False

    ring = F[0].ring
    if ord is not None and OrderingKind(ord) != ring.ordering.kind:
        ring = ring.with_ordering(ord)
        F = [f.set_ring(ring) for f in F]
        G = [g.set_ring(ring) for g in G]
        oracle = [o.set_ring(ring) for o in oracle] if oracle is not None else None
    for g in G:
        if g.ring != ring:
            raise RingMismatchError(f"basis lives in {g.ring}, input in {ring}")

    for a in range(len(G)):
        for b in range(a):
            check_deadline()
            if mono_is_coprime(G[a].lm, G[b].lm):
                continue
            s = plain_spoly(G[a], G[b])
            if s and not reduces_to_zero(s, G):
                logger.info(f"verification failed: s-polynomial of elements {b} and {a} is nonzero")
                return False

    for k, f in enumerate(F):
        check_deadline()
        if not reduces_to_zero(f, G):
            logger.info(f"verification failed: input {k} is not in the ideal of the basis")
            return False

    if oracle is None:
        from .buchberger import buchberger_sugar

        config = None
        if timeout_seconds is not None:
            remaining = max(timeout_seconds - (time.perf_counter() - started), 1e-6)
            config = EngineConfig(algorithm=Algorithm.BUCHBERGER_SUGAR, timeout_seconds=remaining)
        oracle = buchberger_sugar(F, config=config).basis
    for k, g in enumerate(G):
        check_deadline()
        if not reduces_to_zero(g, oracle):
            logger.info(f"verification failed: basis element {k} is not in the input ideal")
            return False
    return True
