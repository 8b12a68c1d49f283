"""Sig-safe reduction of a labeled polynomial modulo a labeled basis."""

import logging
from typing import Sequence

from src.algebra.polyring import Polynomial, Term, axpy_terms, mono_divides
from src.errors import InvariantViolationError
from src.models.engine import ReducerOrder, RunStats

from .labeled import LabeledPolynomial
from .signature import SigOrderSpec, sig_mul

logger = logging.getLogger(__name__)


def sig_safe_reduce(
    f: LabeledPolynomial,
    G: Sequence[LabeledPolynomial],
    spec: SigOrderSpec,
    stats: RunStats,
    *,
    tail: bool = True,
    reducer_order: ReducerOrder = ReducerOrder.INSERTION,
    check: bool = False,
) -> LabeledPolynomial:
    """Reduce ``f`` by reducers whose multiplied signature is strictly below sig(f).

    The leading term is reduced first; once no reducer qualifies for it, lower
    terms are reduced under the same condition unless ``tail`` is False.
    Every divisor rejected only because of its signature is counted as a
    higher-signature detection. The signature of ``f`` never changes and the
    sugar grows to the maximum over all reduction steps.
    """
    terms: list[Term] = list(f.poly.terms)
    if not terms or not G:
        return f

    ring = f.poly.ring
    field = ring.field
    sig_key = spec.key(f.sig)
    reducers = list(G)
    if reducer_order == ReducerOrder.SIGNATURE:
        reducers.sort(key=lambda g: spec.key(g.sig))
    leads = [(g, g.poly.lm) for g in reducers]

    sugar = f.sugar
    steps = 0
    detections = 0
    pos = 0
    while pos < len(terms):
        m, c = terms[pos]
        chosen = None
        for g, lm_g in leads:
            if lm_g[0] > m[0] or not mono_divides(lm_g, m):
                continue
            t = tuple([x - y for x, y in zip(m, lm_g)])
            if spec.key(sig_mul(t, g.sig)) < sig_key:
                chosen = (g, t)
                break
            detections += 1

        if chosen is None:
            if pos == 0 and not tail:
                break
            pos += 1
            continue

        g, t = chosen
        coef = field.mul(c, field.inv(g.poly.lc))
        before = terms[0][0]
        terms = terms[:pos] + axpy_terms(terms[pos:], coef, t, g.poly.terms, ring)
        steps += 1
        if t[0] + g.sugar > sugar:
            sugar = t[0] + g.sugar

        if check:
            _check_step(terms, pos, m, before, ring)

    stats.reduction_steps += steps
    stats.higher_sig_detections += detections
    return LabeledPolynomial(f.sig, Polynomial(ring, tuple(terms)), sugar, f.gen_deg)


def _check_step(terms: list[Term], pos: int, cancelled, before, ring) -> None:
    """Per-step contract: the cancelled monomial is gone and the lead never grows."""
    if pos < len(terms) and terms[pos][0] == cancelled:
        raise InvariantViolationError(f"monomial {cancelled} survived its reduction step")
    if pos == 0:
        if terms and not ring.key(terms[0][0]) < ring.key(before):
            raise InvariantViolationError("leading monomial did not decrease")
    elif terms[0][0] != before:
        raise InvariantViolationError("tail step changed the leading monomial")
