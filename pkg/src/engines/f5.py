"""F5-style degree presorting on top of the signature engine."""

import logging

from src.algebra.polyring import Polynomial
from src.models.algebra import SigOrderKind
from src.models.engine import Algorithm
from src.signatures.labeled import CriticalPair

from .buchberger import complete_basis
from .queue import PairQueue
from .sba import SBAEngine

logger = logging.getLogger(__name__)


class F5PresortEngine(SBAEngine):
    """Processes pairs bucket by bucket, by signature inside a bucket.

    The bucket of a pair is its degree under Schreyer and ``(index, degree)``
    under POT. The smallest pending bucket is moved into the current set
    ``Q`` when ``Q`` runs dry; new pairs whose bucket does not exceed the
    current one join ``Q``, the rest wait in the pending set. On
    inhomogeneous input this can process a larger signature before a smaller
    one, so the result is closed by Buchberger completion.
    """

    algorithm = Algorithm.F5_PRESORT

    def _compute(self, F: list[Polynomial]) -> list[Polynomial]:
        if not F[0].ring.ordering.degree_compatible:
            logger.warning("f5_presort on a non degree-compatible ordering; degree buckets lose meaning")
        polys = super()._compute(F)
        if self.stats.homogeneous_input:
            return polys
        completed, added = complete_basis(polys)
        self.stats.completion_additions = added
        if added:
            logger.warning(f"Completion added {added} element(s) to the presorted basis")
        return completed

    def _bucket(self, pair: CriticalPair) -> tuple:
        if self.config.sig_order == SigOrderKind.POT:
            return (pair.pair_sig.idx, pair.pair_deg)
        return (pair.pair_deg,)

    def _setup_queue(self) -> None:
        spec = self.spec
        self.queue: PairQueue[CriticalPair] = PairQueue(key=lambda pr: spec.key(pr.pair_sig))
        self.pending: PairQueue[CriticalPair] = PairQueue(
            key=lambda pr: (self._bucket(pr), spec.key(pr.pair_sig))
        )
        self.current_bucket: tuple = ()

    def _has_pairs(self) -> bool:
        return bool(self.queue) or bool(self.pending)

    def _select(self) -> CriticalPair:
        if not self.queue:
            self.current_bucket = self._bucket(self.pending.peek())
            while self.pending and self._bucket(self.pending.peek()) == self.current_bucket:
                self.queue.push(self.pending.pop())
        return self.queue.pop()

    def _enqueue(self, pair: CriticalPair) -> None:
        if self.current_bucket and self._bucket(pair) <= self.current_bucket:
            self.queue.push(pair)
        else:
            self.pending.push(pair)
