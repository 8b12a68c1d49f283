"""Labeled polynomials, critical pairs and their degree bookkeeping."""

from typing import NamedTuple, Optional, Sequence

from src.algebra.polyring import (
    Monomial,
    Polynomial,
    axpy_terms,
    mono_div,
    mono_divides,
    mono_lcm,
)

from .signature import Signature, SigOrderSpec, sig_mul


class LabeledPolynomial(NamedTuple):
    """A polynomial together with one of its signatures and its sugar degree."""

    sig: Signature
    poly: Polynomial
    sugar: int
    gen_deg: int  # deg(f_idx) of the generator the signature points at

    @property
    def lm(self) -> Monomial:
        return self.poly.lm

    @property
    def sigdeg(self) -> int:
        return self.sig.mono[0] + self.gen_deg


def sigdeg(f: LabeledPolynomial) -> int:
    """deg(t) + deg(f_i) for the signature t*e_i."""
    return f.sigdeg


def sugar_of_sum(a: int, b: int) -> int:
    return a if a >= b else b


def sugar_of_mul(t: Monomial, a: int) -> int:
    return t[0] + a


def initial_element(idx: int, f: Polynomial) -> LabeledPolynomial:
    """The labeled input ``(e_idx, f)``; its sugar is its degree."""
    return LabeledPolynomial(Signature(f.ring.one, idx), f, f.deg, f.deg)


class CriticalPair(NamedTuple):
    """A pair of basis positions with everything needed to schedule it.

    ``u_f`` multiplies ``basis[i]`` and ``u_g`` multiplies ``basis[j]``;
    engines create pairs with the newer element as ``i``. ``top`` is the
    position whose multiplied signature is ``pair_sig`` and ``low_sig`` is
    the other multiplied signature.
    """

    i: int
    j: int
    lcm: Monomial
    u_f: Monomial
    u_g: Monomial
    pair_sig: Signature
    pair_deg: int
    sig_deg: int
    sugar: int
    entry_seq: int
    top: int
    low_sig: Signature


def make_pair(
    i: int,
    j: int,
    basis: Sequence[LabeledPolynomial],
    spec: SigOrderSpec,
    entry_seq: int = 0,
) -> Optional[CriticalPair]:
    """Build the critical pair of ``basis[i]`` and ``basis[j]``.

    Returns ``None`` for a non-minimal pair, i.e. when both multiplied
    signatures coincide.
    """
    f, g = basis[i], basis[j]
    lm_f, lm_g = f.poly.lm, g.poly.lm
    lcm = mono_lcm(lm_f, lm_g)
    u_f = mono_div(lcm, lm_f)
    u_g = mono_div(lcm, lm_g)
    sf = sig_mul(u_f, f.sig)
    sg = sig_mul(u_g, g.sig)
    c = spec.cmp(sf, sg)
    if c == 0:
        return None
    if c > 0:
        top, pair_sig, low_sig, top_gen_deg = i, sf, sg, f.gen_deg
    else:
        top, pair_sig, low_sig, top_gen_deg = j, sg, sf, g.gen_deg
    sugar = sugar_of_sum(sugar_of_mul(u_f, f.sugar), sugar_of_mul(u_g, g.sugar))
    return CriticalPair(
        i=i,
        j=j,
        lcm=lcm,
        u_f=u_f,
        u_g=u_g,
        pair_sig=pair_sig,
        pair_deg=lcm[0],
        sig_deg=pair_sig.mono[0] + top_gen_deg,
        sugar=sugar,
        entry_seq=entry_seq,
        top=top,
        low_sig=low_sig,
    )


def spoly(pair: CriticalPair, basis: Sequence[LabeledPolynomial]) -> LabeledPolynomial:
    """``lc(g)*u_f*f - lc(f)*u_g*g`` labeled with the pair signature."""
    f, g = basis[pair.i].poly, basis[pair.j].poly
    ring = f.ring
    first = f.mul_term(g.lc, pair.u_f)
    terms = axpy_terms(first.terms, f.lc, pair.u_g, g.terms, ring)
    return LabeledPolynomial(
        pair.pair_sig,
        Polynomial(ring, tuple(terms)),
        pair.sugar,
        basis[pair.top].gen_deg,
    )


def is_sig_redundant(r: LabeledPolynomial, G: Sequence[LabeledPolynomial]) -> bool:
    """True iff some h in G has sig(h) | sig(r) and lm(h) | lm(r)."""
    s = r.sig
    lm_r = r.poly.lm
    for h in G:
        if h.sig.idx == s.idx and mono_divides(h.sig.mono, s.mono) and mono_divides(h.poly.lm, lm_r):
            return True
    return False
