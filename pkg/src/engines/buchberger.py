"""Buchberger's algorithm with Gebauer-Moeller pair elimination and sugar selection.

This engine ignores signatures entirely and serves as the correctness oracle
for the signature engines.
"""

import logging
from typing import NamedTuple, Optional, Sequence

from src.algebra.polyring import (
    Monomial,
    Polynomial,
    mono_div,
    mono_divides,
    mono_is_coprime,
    mono_lcm,
)
from src.models.engine import Algorithm, EngineConfig, TraceEntry

from .base import BaseEngine, GrobnerResult
from .interreduce import interreduce
from .normal_form import plain_spoly, reduce_with_sugar
from .queue import PairQueue

logger = logging.getLogger(__name__)


class SugarPair(NamedTuple):
    """A classical critical pair; ``i`` is the newer element."""

    i: int
    j: int
    lcm: Monomial
    sugar: int
    entry_seq: int


class BuchbergerSugarEngine(BaseEngine):
    """Buchberger with the product and chain criteria.

    Pairs leave the queue by increasing sugar, then degree, then lcm under
    the monomial ordering.
    """

    algorithm = Algorithm.BUCHBERGER_SUGAR

    def __init__(self, config: Optional[EngineConfig] = None):
        super().__init__(config or EngineConfig(algorithm=Algorithm.BUCHBERGER_SUGAR))
        self.added = 0

    def _compute(self, F: list[Polynomial]) -> list[Polynomial]:
        stats = self.stats
        ring = F[0].ring
        self.polys: list[Polynomial] = []
        self.sugars: list[int] = []
        self.active: list[int] = []  # positions still in the basis
        self._seq = 0
        self.queue: PairQueue[SugarPair] = PairQueue(
            key=lambda pr: (pr.sugar, pr.lcm[0], ring.key(pr.lcm))
        )

        for f in F:
            self._update(f.monic(), f.deg)
        self.added = 0

        while self.queue:
            self.check_deadline()
            pair = self.queue.pop()
            s = plain_spoly(self.polys[pair.i], self.polys[pair.j])
            self.trace.append(
                TraceEntry(pair_deg=pair.lcm[0], spoly_deg=s.deg, sugar=pair.sugar)
            )
            reducers = [(self.polys[k], self.sugars[k]) for k in self.active]
            h, sugar, steps = reduce_with_sugar(s, pair.sugar, reducers, self.config.tail_reduce)
            stats.spoly_reductions += 1
            stats.reduction_steps += steps
            if not h:
                stats.zero_reductions += 1
                continue
            self.added += 1
            self._update(h.monic(), sugar)

        stats.completion_additions = self.added
        return [self.polys[k] for k in self.active]

    def _update(self, h: Polynomial, sugar: int) -> None:
        """Gebauer-Moeller update of the active set and the pair queue with ``h``."""
        stats = self.stats
        ih = len(self.polys)
        self.polys.append(h)
        self.sugars.append(sugar)
        mh = h.lm

        # new pairs (h, g): drop those whose lcm is a proper multiple of another's
        candidates = [(ig, mono_lcm(mh, self.polys[ig].lm)) for ig in self.active]
        kept: list[tuple[int, Monomial]] = []
        for k, (ig, lcm) in enumerate(candidates):
            coprime = mono_is_coprime(mh, self.polys[ig].lm)
            if coprime:
                kept.append((ig, lcm))
                continue
            later = candidates[k + 1:]
            if any(mono_divides(m, lcm) for _, m in later) or any(
                mono_divides(m, lcm) for _, m in kept
            ):
                stats.discarded_chain_criterion += 1
                continue
            kept.append((ig, lcm))

        new_pairs = []
        for ig, lcm in kept:
            if mono_is_coprime(mh, self.polys[ig].lm):
                stats.discarded_product_criterion += 1
                continue
            new_pairs.append((ig, lcm))

        # old pairs whose lcm h's lead divides strictly in both directions
        def chained(pr: SugarPair) -> bool:
            if not mono_divides(mh, pr.lcm):
                return False
            return (
                mono_lcm(self.polys[pr.i].lm, mh) != pr.lcm
                and mono_lcm(self.polys[pr.j].lm, mh) != pr.lcm
            )

        stats.discarded_chain_criterion += self.queue.remove_if(chained)

        for ig, lcm in new_pairs:
            g = self.polys[ig]
            pair_sugar = max(
                sugar + mono_div(lcm, mh)[0], self.sugars[ig] + mono_div(lcm, g.lm)[0]
            )
            self.queue.push(SugarPair(ih, ig, lcm, pair_sugar, self._seq))
            self._seq += 1
            stats.pairs_created += 1

        self.active = [ig for ig in self.active if not mono_divides(mh, self.polys[ig].lm)]
        self.active.append(ih)
        stats.max_basis_size = max(stats.max_basis_size, len(self.active))


def buchberger_sugar(
    F: Sequence[Polynomial], ord: Optional[str] = None, config: Optional[EngineConfig] = None
) -> GrobnerResult:
    """Reduced Groebner basis of ``F`` by the sugar oracle.

    ``ord`` optionally re-embeds ``F`` into the same variables under another
    ordering.
    """
    if ord is not None and F:
        ring = F[0].ring.with_ordering(ord)
        F = [f.set_ring(ring) for f in F]
    return BuchbergerSugarEngine(config).run(F)


def complete_basis(G: Sequence[Polynomial]) -> tuple[list[Polynomial], int]:
    """Close ``G`` under Buchberger completion.

    Returns:
        The reduced basis and the number of nonzero remainders the
        completion had to add (0 when ``G`` already was a Groebner basis).
    """
    G = interreduce(G)
    if not G:
        return [], 0
    engine = BuchbergerSugarEngine()
    result = engine.run(G)
    if engine.added:
        logger.info(f"Buchberger completion added {engine.added} element(s)")
    return result.basis, engine.added
