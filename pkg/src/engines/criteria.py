"""The two signature criteria: known syzygies and rewritability."""

from typing import Optional, Sequence

from src.algebra.polyring import Monomial, mono_divides
from src.models.engine import RewriteFlavor
from src.signatures.labeled import CriticalPair, LabeledPolynomial
from src.signatures.signature import Signature, SigOrderSpec, SyzygySet


class RewriteRules:
    """Signatures of basis elements per module index, in insertion order.

    A rule ``(position, mono)`` says that basis element ``position`` has
    signature ``mono * e_idx``.
    """

    def __init__(self) -> None:
        self._by_idx: dict[int, list[tuple[int, Monomial]]] = {}

    def __len__(self) -> int:
        return sum(len(v) for v in self._by_idx.values())

    def add(self, position: int, sig: Signature) -> None:
        self._by_idx.setdefault(sig.idx, []).append((position, sig.mono))

    def rewritable(self, sig: Signature, after: int) -> bool:
        """True iff a rule added after basis position ``after`` divides ``sig``."""
        rules = self._by_idx.get(sig.idx)
        if not rules:
            return False
        # scan newest first; rules are sorted by position
        for position, mono in reversed(rules):
            if position <= after:
                return False
            if mono_divides(mono, sig.mono):
                return True
        return False

    @classmethod
    def from_basis(cls, basis: Sequence[LabeledPolynomial]) -> "RewriteRules":
        rules = cls()
        for position, g in enumerate(basis):
            rules.add(position, g.sig)
        return rules


def criterion_nonminimal_syzygy(pair: CriticalPair, syz: SyzygySet, spec: SigOrderSpec) -> bool:
    """True (discard) iff a known syzygy signature divides the pair signature."""
    return syz.divides(pair.pair_sig)


def criterion_rewritable(
    pair: CriticalPair,
    basis: Sequence[LabeledPolynomial],
    spec: SigOrderSpec,
    flavor: RewriteFlavor = RewriteFlavor.ARRI_PERRY,
    rules: Optional[RewriteRules] = None,
) -> bool:
    """True (discard) iff the pair can be rewritten by a later basis element.

    Arri-Perry looks only at the component supplying the pair signature;
    the F5 rule list also rewrites the other component.
    """
    if rules is None:
        rules = RewriteRules.from_basis(basis)
    if rules.rewritable(pair.pair_sig, pair.top):
        return True
    if flavor == RewriteFlavor.F5_RULE_LIST:
        low = pair.j if pair.top == pair.i else pair.i
        return rules.rewritable(pair.low_sig, low)
    return False
