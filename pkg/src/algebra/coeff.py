"""Arithmetic in the prime field GF(p).

Field elements are plain ``int`` residues in ``[0, p)``; :class:`PrimeField`
carries the modulus and implements the operations. Polynomial kernels
multiply residues inline as ``a * b % p``.
"""

from enum import Enum

from pydantic import ValidationError

from src.config.constants import DEFAULT_PRIME
from src.errors import DivisionByZeroError, NonPrimeModulusError
from src.models.algebra import FieldSpec

FieldElem = int


class ArithOp(str, Enum):
    """Binary field operations exposed through :func:`fp_arith`."""

    ADD = "add"
    SUB = "sub"
    MUL = "mul"


class PrimeField:
    """The field GF(p) for a prime 2 < p < 2^31."""

    __slots__ = ("spec", "p")

    def __init__(self, p: int = DEFAULT_PRIME):
        try:
            self.spec = FieldSpec(p=p)
        except ValidationError as e:
            raise NonPrimeModulusError(f"invalid field modulus {p}: not a prime in (2, 2^31)") from e
        self.p = p

    def __repr__(self) -> str:
        return f"GF({self.p})"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self) -> int:
        return hash(("GF", self.p))

    def __reduce__(self):
        return (PrimeField, (self.p,))

    def __call__(self, value: int) -> FieldElem:
        """Canonical residue of an arbitrary integer."""
        return value % self.p

    def add(self, a: FieldElem, b: FieldElem) -> FieldElem:
        s = a + b
        return s - self.p if s >= self.p else s

    def sub(self, a: FieldElem, b: FieldElem) -> FieldElem:
        d = a - b
        return d + self.p if d < 0 else d

    def mul(self, a: FieldElem, b: FieldElem) -> FieldElem:
        return a * b % self.p

    def neg(self, a: FieldElem) -> FieldElem:
        return self.p - a if a else 0

    def inv(self, a: FieldElem) -> FieldElem:
        """Inverse via the extended Euclidean algorithm."""
        if a % self.p == 0:
            raise DivisionByZeroError(f"0 has no inverse in GF({self.p})")
        r0, r1 = self.p, a % self.p
        s0, s1 = 0, 1
        while r1:
            q = r0 // r1
            r0, r1 = r1, r0 - q * r1
            s0, s1 = s1, s0 - q * s1
        return s0 % self.p

    def div(self, a: FieldElem, b: FieldElem) -> FieldElem:
        return a * self.inv(b) % self.p

    def symmetric(self, a: FieldElem) -> int:
        """Representative in (-p/2, p/2] used for human-readable output."""
        return a - self.p if a > self.p // 2 else a


def fp_arith(a: FieldElem, b: FieldElem, op: ArithOp | str, field: PrimeField) -> FieldElem:
    """Apply ``add``, ``sub`` or ``mul`` to two canonical residues."""
    op = ArithOp(op)
    if op == ArithOp.ADD:
        return field.add(a, b)
    if op == ArithOp.SUB:
        return field.sub(a, b)
    return field.mul(a, b)


def fp_inv(a: FieldElem, field: PrimeField) -> FieldElem:
    """Multiplicative inverse; raises :class:`DivisionByZeroError` on 0."""
    return field.inv(a)
