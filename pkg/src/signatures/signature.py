"""Signatures, the POT and Schreyer module orderings, and known syzygy signatures."""

from functools import lru_cache
from typing import Iterator, NamedTuple, Optional, Sequence

from src.algebra.polyring import Monomial, PolyRing, mono_divides, mono_mul
from src.config.constants import KEY_CACHE_SIZE
from src.errors import DimensionMismatchError
from src.models.algebra import SigOrderKind


class Signature(NamedTuple):
    """The module term ``mono * e_idx``; ``idx`` is 1-based."""

    mono: Monomial
    idx: int

    @property
    def deg(self) -> int:
        return self.mono[0]


def sig_mul(t: Monomial, s: Signature) -> Signature:
    return Signature(mono_mul(t, s.mono), s.idx)


def sig_divides(a: Signature, b: Signature) -> bool:
    """a | b: same module index and monomial divisibility."""
    return a.idx == b.idx and mono_divides(a.mono, b.mono)


class SigOrderSpec:
    """A module ordering over the base ordering of ``ring``.

    POT compares the index first. Schreyer compares ``mono * lead_of_gen[idx]``
    under the base ordering and breaks ties by the smaller index.
    """

    __slots__ = ("kind", "ring", "lead_of_gen", "ngens", "key")

    def __init__(
        self,
        kind: SigOrderKind | str,
        ring: PolyRing,
        lead_of_gen: Sequence[Monomial] = (),
        ngens: Optional[int] = None,
    ):
        self.kind = SigOrderKind(kind)
        self.ring = ring
        self.lead_of_gen = tuple(lead_of_gen)
        self.ngens = ngens if ngens is not None else len(self.lead_of_gen)
        if self.kind == SigOrderKind.SCHREYER:
            if len(self.lead_of_gen) != self.ngens or not self.lead_of_gen:
                raise ValueError("Schreyer ordering needs one leading monomial per generator")
            for m in self.lead_of_gen:
                if len(m) != ring.nvars + 1:
                    raise DimensionMismatchError(f"leading monomial {m} does not fit {ring}")
        self.key = lru_cache(maxsize=KEY_CACHE_SIZE)(self._key)

    def __repr__(self) -> str:
        return f"SigOrderSpec({self.kind.value}, m={self.ngens})"

    def _key(self, s: Signature) -> tuple:
        """Sort key of a signature under this module ordering."""
        if not 1 <= s.idx <= self.ngens:
            raise IndexError(f"signature index {s.idx} outside [1, {self.ngens}]")
        if self.kind == SigOrderKind.POT:
            return (s.idx, self.ring.key(s.mono))
        return (self.ring.key(mono_mul(s.mono, self.lead_of_gen[s.idx - 1])), s.idx)

    def cmp(self, a: Signature, b: Signature) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def max(self, a: Signature, b: Signature) -> Signature:
        return a if self.key(a) >= self.key(b) else b


def sig_cmp(a: Signature, b: Signature, spec: SigOrderSpec) -> int:
    """Three-way comparison under ``spec``: -1, 0 or 1."""
    return spec.cmp(a, b)


class SyzygySet:
    """Leading signatures of known syzygies, kept divisibility-minimal per index."""

    def __init__(self) -> None:
        self._by_idx: dict[int, list[Monomial]] = {}

    def __len__(self) -> int:
        return sum(len(v) for v in self._by_idx.values())

    def __iter__(self) -> Iterator[Signature]:
        for idx in sorted(self._by_idx):
            for m in self._by_idx[idx]:
                yield Signature(m, idx)

    def divides(self, s: Signature) -> bool:
        """True iff some stored signature divides ``s``."""
        for m in self._by_idx.get(s.idx, ()):
            if mono_divides(m, s.mono):
                return True
        return False

    def add(self, s: Signature) -> bool:
        """Store ``s`` unless already covered; returns whether it was stored."""
        if self.divides(s):
            return False
        bucket = self._by_idx.setdefault(s.idx, [])
        bucket[:] = [m for m in bucket if not mono_divides(s.mono, m)]
        bucket.append(s.mono)
        return True

    @classmethod
    def koszul(cls, leads: Sequence[Monomial], spec: SigOrderSpec) -> "SyzygySet":
        """Seed with the leading signatures of ``f_j e_i - f_i e_j`` for i > j."""
        syz = cls()
        for i in range(1, len(leads)):
            for j in range(i):
                a = Signature(leads[j], i + 1)
                b = Signature(leads[i], j + 1)
                syz.add(spec.max(a, b))
        return syz
