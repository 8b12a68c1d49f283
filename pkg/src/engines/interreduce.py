"""Turn a Groebner basis into the reduced Groebner basis."""

from typing import Sequence

from src.algebra.polyring import Polynomial, mono_divides

from .normal_form import normal_form


def interreduce(G: Sequence[Polynomial]) -> list[Polynomial]:
    """Minimalize, fully tail-reduce and make monic; sorted ascending by lm.

    For a Groebner basis the result is its unique reduced basis, so bases
    from different engines compare term for term.
    """
    polys = [g.monic() for g in G if g]
    if not polys:
        return []
    ring = polys[0].ring
    polys.sort(key=lambda g: ring.key(g.lm))

    minimal: list[Polynomial] = []
    for g in polys:
        if not any(mono_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)

    # no lm divides another, so reducing by the others keeps every lm
    return [
        normal_form(g, minimal[:k] + minimal[k + 1:]).monic()
        for k, g in enumerate(minimal)
    ]
