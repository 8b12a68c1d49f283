"""Cache key generation for oracle bases."""

import hashlib
import json
from typing import Sequence

from src.algebra.polyring import Polynomial


def system_key(polys: Sequence[Polynomial]) -> str:
    """Generate cache key for an input system.

    Args:
        polys: Polynomials of one ring.

    Returns:
        Cache key string; equal systems in equal rings share a key.
    """
    if not polys:
        return "oracle:empty"
    ring = polys[0].ring
    payload = {
        "vars": list(ring.names),
        "p": ring.p,
        "order": ring.ordering.kind.value,
        "polys": [[[list(m), c] for m, c in f.terms] for f in polys],
    }
    digest = hashlib.sha256(json.dumps(payload, sort_keys=True).encode()).hexdigest()[:32]
    return f"oracle:{digest}"
