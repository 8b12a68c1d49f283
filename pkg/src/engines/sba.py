"""The generic signature-based algorithm (SBA)."""

import logging
from typing import Optional

from src.algebra.polyring import Polynomial
from src.errors import InvariantViolationError
from src.models.engine import Algorithm, EngineConfig, TraceEntry
from src.signatures.labeled import (
    CriticalPair,
    LabeledPolynomial,
    initial_element,
    is_sig_redundant,
    make_pair,
    spoly,
)
from src.signatures.reduction import sig_safe_reduce
from src.signatures.signature import SigOrderSpec, SyzygySet, sig_mul

from .base import BaseEngine
from .criteria import RewriteRules, criterion_nonminimal_syzygy, criterion_rewritable
from .queue import PairQueue

logger = logging.getLogger(__name__)


class SBAEngine(BaseEngine):
    """Processes critical pairs by increasing signature.

    Every input enters the basis as ``(e_i, f_i)`` up front, together with all
    pairs between inputs. A pair is checked against the enabled criteria
    when it is created and again when it is popped. Zero reductions feed the
    syzygy set, sig-redundant results are dropped and everything else joins
    the basis and spawns new pairs.
    """

    algorithm = Algorithm.SBA

    def __init__(self, config: Optional[EngineConfig] = None):
        super().__init__(config)
        self.basis: list[LabeledPolynomial] = []

    # ------------------------------------------------------------------
    # Main loop
    # ------------------------------------------------------------------

    def _compute(self, F: list[Polynomial]) -> list[Polynomial]:
        cfg = self.config
        F = [f.monic() for f in F]
        ring = F[0].ring
        self.ring = ring
        self.degree_compatible = ring.ordering.degree_compatible
        self.spec = SigOrderSpec(cfg.sig_order, ring, [f.lm for f in F], ngens=len(F))
        self.basis = []
        self.rules = RewriteRules()
        self.syz = SyzygySet.koszul([f.lm for f in F], self.spec) if cfg.use_nonminimal_syzygy else SyzygySet()
        self._seq = 0
        self._last_key: Optional[tuple] = None
        self._setup_queue()

        for idx, f in enumerate(F, 1):
            self._insert(initial_element(idx, f), principal_syzygies=False)

        while self._has_pairs():
            self.check_deadline()
            self._process(self._select())

        return [g.poly for g in self.basis]

    def _setup_queue(self) -> None:
        spec = self.spec
        self.queue: PairQueue[CriticalPair] = PairQueue(key=lambda pr: spec.key(pr.pair_sig))

    def _has_pairs(self) -> bool:
        return bool(self.queue)

    def _select(self) -> CriticalPair:
        return self.queue.pop()

    def _enqueue(self, pair: CriticalPair) -> None:
        self.queue.push(pair)

    # ------------------------------------------------------------------
    # Pair handling
    # ------------------------------------------------------------------

    def _discarded(self, pair: CriticalPair) -> bool:
        """Apply the enabled criteria, counting what they discard."""
        cfg = self.config
        if cfg.use_nonminimal_syzygy and criterion_nonminimal_syzygy(pair, self.syz, self.spec):
            self.stats.discarded_syzygy_criterion += 1
            return True
        if cfg.use_rewritable and criterion_rewritable(
            pair, self.basis, self.spec, cfg.rewrite_flavor, self.rules
        ):
            self.stats.discarded_rewritable += 1
            return True
        return False

    def _process(self, pair: CriticalPair) -> None:
        cfg = self.config
        stats = self.stats
        if self._discarded(pair):
            return

        key = self.spec.key(pair.pair_sig)
        if self._last_key is not None and key < self._last_key:
            stats.signature_order_violations += 1
            if cfg.check_invariants and self.algorithm == Algorithm.SBA:
                raise InvariantViolationError(f"signature {pair.pair_sig} processed out of order")
        self._last_key = key

        s = spoly(pair, self.basis)
        self.trace.append(
            TraceEntry(
                sig_mono=pair.pair_sig.mono,
                sig_idx=pair.pair_sig.idx,
                sig_deg=pair.sig_deg,
                pair_deg=pair.pair_deg,
                spoly_deg=s.poly.deg,
                sugar=pair.sugar,
            )
        )
        self._audit_relation(pair, s)
        self._audit_sugar(s)

        r = sig_safe_reduce(
            s,
            self.basis,
            self.spec,
            stats,
            tail=cfg.tail_reduce,
            reducer_order=cfg.reducer_order,
            check=cfg.check_invariants,
        )
        stats.spoly_reductions += 1

        if not r.poly:
            stats.zero_reductions += 1
            if cfg.use_nonminimal_syzygy:
                self.syz.add(r.sig)
            return
        if cfg.sig_redundant_filter and is_sig_redundant(r, self.basis):
            stats.sig_redundant_skips += 1
            return
        self._insert(r)

    def _insert(self, g: LabeledPolynomial, principal_syzygies: bool = True) -> None:
        """Add a monic ``g`` to the basis and queue its pairs with older elements."""
        cfg = self.config
        stats = self.stats
        g = g._replace(poly=g.poly.monic())
        self._audit_sugar(g)
        position = len(self.basis)
        self.basis.append(g)
        self.rules.add(position, g.sig)
        stats.max_basis_size = max(stats.max_basis_size, len(self.basis))

        if principal_syzygies and cfg.use_nonminimal_syzygy:
            lm_g = g.poly.lm
            for h in self.basis[:position]:
                a = sig_mul(h.poly.lm, g.sig)
                b = sig_mul(lm_g, h.sig)
                if a != b:
                    self.syz.add(self.spec.max(a, b))

        for k in range(position):
            pair = make_pair(position, k, self.basis, self.spec, self._seq)
            self._seq += 1
            stats.pairs_created += 1
            if pair is None:
                stats.discarded_nonminimal_pair += 1
                continue
            if self._discarded(pair):
                continue
            self._enqueue(pair)

    # ------------------------------------------------------------------
    # Audits
    # ------------------------------------------------------------------

    def _audit_relation(self, pair: CriticalPair, s: LabeledPolynomial) -> None:
        """sig_deg >= pair_deg >= deg(spoly), with equality on homogeneous input."""
        stats = self.stats
        d = s.poly.deg
        holds = pair.sig_deg >= pair.pair_deg and (d < 0 or pair.pair_deg >= d)
        if not holds:
            stats.relation_violations += 1
            if self.config.check_invariants and self.degree_compatible:
                raise InvariantViolationError(
                    f"sig_deg {pair.sig_deg} >= pair_deg {pair.pair_deg} >= deg {d} broken"
                )
            return
        if d < 0:
            return
        if pair.sig_deg > pair.pair_deg or pair.pair_deg > d:
            stats.strict_relation_events += 1
            if stats.strict_relation_events == 1:
                logger.info(
                    f"strict degree relation at {pair.pair_sig}: "
                    f"sig_deg={pair.sig_deg} pair_deg={pair.pair_deg} deg={d}"
                )
            if stats.homogeneous_input:
                stats.homogeneous_equality_violations += 1

    def _audit_sugar(self, f: LabeledPolynomial) -> None:
        """Sugar never drops below sigdeg; equality is the expected case."""
        stats = self.stats
        excess = f.sugar - f.sigdeg
        if excess == 0:
            return
        stats.sugar_sigdeg_violations += 1
        stats.sugar_sigdeg_excess = max(stats.sugar_sigdeg_excess, excess)
        if excess < 0:
            stats.sugar_below_sigdeg += 1
            if self.config.check_invariants:
                raise InvariantViolationError(f"sugar {f.sugar} below sigdeg {f.sigdeg} at {f.sig}")
