"""Plain (signature-free) reduction used by the sugar engine and verification."""

from typing import Optional, Sequence

from src.algebra.polyring import (
    Polynomial,
    Term,
    axpy_terms,
    mono_div,
    mono_divides,
    mono_lcm,
)


def reduce_with_sugar(
    f: Polynomial,
    sugar: int,
    reducers: Sequence[tuple[Polynomial, int]],
    tail: bool = True,
) -> tuple[Polynomial, int, int]:
    """Full normal form of ``f`` modulo ``(polynomial, sugar)`` reducers.

    Reducers are scanned in the given order and the first divisor is used.

    Returns:
        The remainder, its sugar degree and the number of reduction steps.
    """
    terms: list[Term] = list(f.terms)
    ring = f.ring
    field = ring.field
    leads = [(g, s, g.lm) for g, s in reducers if g]
    steps = 0
    pos = 0
    while pos < len(terms):
        m, c = terms[pos]
        for g, s, lm_g in leads:
            if lm_g[0] <= m[0] and mono_divides(lm_g, m):
                t = tuple([x - y for x, y in zip(m, lm_g)])
                coef = field.mul(c, field.inv(g.lc))
                terms = terms[:pos] + axpy_terms(terms[pos:], coef, t, g.terms, ring)
                steps += 1
                if t[0] + s > sugar:
                    sugar = t[0] + s
                break
        else:
            if pos == 0 and not tail:
                break
            pos += 1
    return Polynomial(ring, tuple(terms)), sugar, steps


def normal_form(f: Polynomial, G: Sequence[Polynomial], tail: bool = True) -> Polynomial:
    """Remainder of ``f`` on division by ``G``."""
    remainder, _, _ = reduce_with_sugar(f, max(f.deg, 0), [(g, max(g.deg, 0)) for g in G], tail)
    return remainder


def reduces_to_zero(f: Polynomial, G: Sequence[Polynomial]) -> bool:
    return not normal_form(f, G, tail=False)


def plain_spoly(f: Polynomial, g: Polynomial) -> Optional[Polynomial]:
    """Classical s-polynomial ``lc(g)*u_f*f - lc(f)*u_g*g``; ``None`` if either is zero."""
    if not f or not g:
        return None
    lcm = mono_lcm(f.lm, g.lm)
    first = f.mul_term(g.lc, mono_div(lcm, f.lm))
    return Polynomial(f.ring, tuple(axpy_terms(first.terms, f.lc, mono_div(lcm, g.lm), g.terms, f.ring)))
