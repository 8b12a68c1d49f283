"""Monomials, monomial orderings and sparse polynomials over GF(p).

Monomials are degree-prefixed exponent tuples ``(deg, e_1, ..., e_n)``.
Keeping the total degree in slot 0 makes it free to read, and componentwise
addition/subtraction keeps it correct automatically. Polynomials hold a tuple
of ``(monomial, coefficient)`` terms sorted strictly descending under the
ring's ordering, with no zero coefficients.
"""

from functools import lru_cache
from typing import Callable, Iterable, Mapping, Optional, Sequence

from src.config.constants import KEY_CACHE_SIZE, MAX_DEGREE, MAX_EXPONENT
from src.errors import (
    DimensionMismatchError,
    ExponentOverflowError,
    InvariantViolationError,
    RingMismatchError,
    ZeroPolynomialError,
)
from src.models.algebra import OrderingKind, OrderingSpec

from .coeff import FieldElem, PrimeField

Monomial = tuple[int, ...]
Term = tuple[Monomial, FieldElem]


# ============================================================================
# Monomials
# ============================================================================


def make_monomial(exps: Iterable[int]) -> Monomial:
    """Build a monomial from its exponent vector, checking the 16-bit range."""
    exps = tuple(int(e) for e in exps)
    for e in exps:
        if e < 0:
            raise ValueError(f"negative exponent in {exps}")
        if e > MAX_EXPONENT:
            raise ExponentOverflowError(f"exponent {e} exceeds {MAX_EXPONENT}")
    deg = sum(exps)
    if deg > MAX_DEGREE:
        raise ExponentOverflowError(f"total degree {deg} exceeds {MAX_DEGREE}")
    return (deg,) + exps


def mono_exps(m: Monomial) -> tuple[int, ...]:
    return m[1:]


def mono_deg(m: Monomial) -> int:
    return m[0]


def _check_dims(a: Monomial, b: Monomial) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(
            f"monomials have {len(a) - 1} and {len(b) - 1} variables"
        )


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    _check_dims(a, b)
    c = tuple([x + y for x, y in zip(a, b)])
    # an exponent can only overflow once the total degree does
    if c[0] > MAX_EXPONENT and max(c[1:]) > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent overflow multiplying {a[1:]} by {b[1:]}")
    return c


def mono_div(a: Monomial, b: Monomial) -> Optional[Monomial]:
    """Quotient a / b, or ``None`` when b does not divide a."""
    _check_dims(a, b)
    c = tuple([x - y for x, y in zip(a, b)])
    for e in c:
        if e < 0:
            return None
    return c


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_dims(a, b)
    exps = tuple([x if x > y else y for x, y in zip(a[1:], b[1:])])
    return (sum(exps),) + exps


def mono_is_coprime(a: Monomial, b: Monomial) -> bool:
    for x, y in zip(a[1:], b[1:]):
        if x and y:
            return False
    return True


def grevlex_key(m: Monomial) -> tuple[int, ...]:
    """Degree first, then the smaller exponent in the last differing variable wins."""
    return (m[0],) + tuple([-e for e in m[:0:-1]])


def lex_key(m: Monomial) -> tuple[int, ...]:
    return m[1:]


ORDER_KEYS: dict[OrderingKind, Callable[[Monomial], tuple]] = {
    OrderingKind.GREVLEX: grevlex_key,
    OrderingKind.LEX: lex_key,
}


def mono_cmp(a: Monomial, b: Monomial, ordering: OrderingSpec | OrderingKind | str) -> int:
    """Three-way comparison: -1, 0 or 1."""
    _check_dims(a, b)
    kind = ordering.kind if isinstance(ordering, OrderingSpec) else OrderingKind(ordering)
    key = ORDER_KEYS[kind]
    ka, kb = key(a), key(b)
    return (ka > kb) - (ka < kb)


# ============================================================================
# Rings
# ============================================================================


class PolyRing:
    """GF(p)[x_1, ..., x_n] with a fixed monomial ordering.

    ``homogenizing`` marks rings whose last variable is the homogenizing
    variable added by :func:`src.algebra.homogenize.homogenize`.
    """

    __slots__ = ("names", "nvars", "field", "ordering", "homogenizing", "_key_fn", "key")

    def __init__(
        self,
        names: Sequence[str],
        field: PrimeField,
        ordering: OrderingSpec | OrderingKind | str = OrderingKind.GREVLEX,
        homogenizing: bool = False,
    ):
        names = tuple(names)
        if not names:
            raise ValueError("a polynomial ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        if not isinstance(ordering, OrderingSpec):
            ordering = OrderingSpec(kind=OrderingKind(ordering))
        self.names = names
        self.nvars = len(names)
        self.field = field
        self.ordering = ordering
        self.homogenizing = homogenizing
        self._key_fn = ORDER_KEYS[ordering.kind]
        # sort key of a monomial: larger key means larger monomial
        self.key: Callable[[Monomial], tuple] = lru_cache(maxsize=KEY_CACHE_SIZE)(self._key_fn)

    def __repr__(self) -> str:
        return f"PolyRing({','.join(self.names)}; {self.field}; {self.ordering.kind.value})"

    def _ident(self) -> tuple:
        return (self.names, self.field.p, self.ordering.kind, self.homogenizing)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PolyRing) and other._ident() == self._ident()

    def __hash__(self) -> int:
        return hash(self._ident())

    def __reduce__(self):
        return (PolyRing, (self.names, self.field, self.ordering, self.homogenizing))

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def one(self) -> Monomial:
        return (0,) * (self.nvars + 1)

    def cmp(self, a: Monomial, b: Monomial) -> int:
        _check_dims(a, b)
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def monomial(self, exps: Iterable[int]) -> Monomial:
        m = make_monomial(exps)
        if len(m) != self.nvars + 1:
            raise DimensionMismatchError(f"expected {self.nvars} exponents, got {len(m) - 1}")
        return m

    def variable(self, i: int) -> Monomial:
        exps = [0] * self.nvars
        exps[i] = 1
        return (1,) + tuple(exps)

    def zero(self) -> "Polynomial":
        return Polynomial(self, ())

    def constant(self, c: int) -> "Polynomial":
        c %= self.p
        return Polynomial(self, ((self.one, c),) if c else ())

    def gen(self, i: int) -> "Polynomial":
        return Polynomial(self, ((self.variable(i), 1),))

    @property
    def gens(self) -> list["Polynomial"]:
        return [self.gen(i) for i in range(self.nvars)]

    def from_dict(self, coeffs: Mapping[Monomial, int]) -> "Polynomial":
        """Normalize coefficients mod p, drop zeros and sort descending."""
        p = self.p
        items = [(m, c % p) for m, c in coeffs.items() if c % p]
        for m, _ in items:
            if len(m) != self.nvars + 1:
                raise DimensionMismatchError(f"monomial {m} does not belong to {self}")
        items.sort(key=lambda t: self.key(t[0]), reverse=True)
        return Polynomial(self, tuple(items))

    def from_terms(self, terms: Iterable[tuple[Iterable[int], int]]) -> "Polynomial":
        """Build a polynomial from ``(exponent vector, coefficient)`` pairs, merging duplicates."""
        acc: dict[Monomial, int] = {}
        for exps, c in terms:
            m = self.monomial(exps)
            acc[m] = acc.get(m, 0) + c
        return self.from_dict(acc)

    def with_ordering(self, ordering: OrderingSpec | OrderingKind | str) -> "PolyRing":
        return PolyRing(self.names, self.field, ordering, self.homogenizing)


# ============================================================================
# Polynomials
# ============================================================================


class Polynomial:
    """Immutable sparse polynomial; ``terms`` sorted strictly descending."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: tuple[Term, ...]):
        self.ring = ring
        self.terms = terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self):
        return iter(self.terms)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Polynomial) and self.ring == other.ring and self.terms == other.terms

    def __hash__(self) -> int:
        return hash(self.terms)

    def __repr__(self) -> str:
        from src.cli.formats import format_polynomial

        return f"Polynomial({format_polynomial(self)!r})"

    def __reduce__(self):
        return (Polynomial, (self.ring, self.terms))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def lm(self) -> Monomial:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading monomial")
        return self.terms[0][0]

    @property
    def lc(self) -> FieldElem:
        if not self.terms:
            raise ZeroPolynomialError("the zero polynomial has no leading coefficient")
        return self.terms[0][1]

    @property
    def deg(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m[0] for m, _ in self.terms)

    @property
    def is_homogeneous(self) -> bool:
        if not self.terms:
            return True
        d = self.terms[0][0][0]
        return all(m[0] == d for m, _ in self.terms)

    def monomials(self) -> list[Monomial]:
        return [m for m, _ in self.terms]

    def scale(self, c: FieldElem) -> "Polynomial":
        p = self.ring.p
        c %= p
        if c == 0:
            return self.ring.zero()
        if c == 1:
            return self
        return Polynomial(self.ring, tuple([(m, a * c % p) for m, a in self.terms]))

    def monic(self) -> "Polynomial":
        if not self.terms or self.terms[0][1] == 1:
            return self
        return self.scale(self.ring.field.inv(self.terms[0][1]))

    def mul_term(self, c: FieldElem, t: Monomial) -> "Polynomial":
        """c * t * self; multiplication by a monomial preserves the sort."""
        p = self.ring.p
        c %= p
        if c == 0 or not self.terms:
            return self.ring.zero()
        return Polynomial(
            self.ring, tuple([(mono_mul(m, t), a * c % p) for m, a in self.terms])
        )

    def _check_ring(self, other: "Polynomial") -> None:
        if self.ring != other.ring:
            raise RingMismatchError(f"{self.ring} vs {other.ring}")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        return Polynomial(self.ring, tuple(_merge(self.terms, other.terms, self.ring)))

    def __neg__(self) -> "Polynomial":
        return self.scale(self.ring.p - 1)

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        self._check_ring(other)
        return poly_axpy(self, 1, self.ring.one, other)

    def __mul__(self, other: "Polynomial | int") -> "Polynomial":
        if isinstance(other, int):
            return self.scale(other)
        self._check_ring(other)
        p = self.ring.p
        acc: dict[Monomial, int] = {}
        for ma, ca in self.terms:
            for mb, cb in other.terms:
                m = mono_mul(ma, mb)
                acc[m] = (acc.get(m, 0) + ca * cb) % p
        return self.ring.from_dict(acc)

    __rmul__ = __mul__

    def set_ring(self, ring: PolyRing) -> "Polynomial":
        """Re-embed into a ring with the same variables (e.g. another ordering)."""
        if ring.nvars != self.ring.nvars or ring.p != self.ring.p:
            raise RingMismatchError(f"cannot move {self.ring} polynomial into {ring}")
        return ring.from_dict(dict(self.terms))

    def validate(self) -> None:
        """Raise if the term list breaks the sorted / nonzero / unique contract."""
        p = self.ring.p
        key = self.ring.key
        prev = None
        for m, c in self.terms:
            if len(m) != self.ring.nvars + 1 or m[0] != sum(m[1:]):
                raise InvariantViolationError(f"malformed monomial {m}")
            if not 0 < c < p:
                raise InvariantViolationError(f"coefficient {c} outside (0, {p})")
            k = key(m)
            if prev is not None and not k < prev:
                raise InvariantViolationError("terms are not strictly descending")
            prev = k


def _merge(a: Sequence[Term], b: Sequence[Term], ring: PolyRing) -> list[Term]:
    """Sum of two sorted term lists."""
    key = ring.key
    p = ring.p
    out: list[Term] = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        ma, ca = a[i]
        mb, cb = b[j]
        if ma == mb:
            s = (ca + cb) % p
            if s:
                out.append((ma, s))
            i += 1
            j += 1
        elif key(ma) > key(mb):
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    if i < la:
        out.extend(a[i:])
    if j < lb:
        out.extend(b[j:])
    return out


def axpy_terms(
    r: Sequence[Term], c: FieldElem, t: Monomial, g: Sequence[Term], ring: PolyRing
) -> list[Term]:
    """Term-list kernel of :func:`poly_axpy`: r - c*t*g."""
    p = ring.p
    neg = (-c) % p
    if neg == 0 or not g:
        return list(r)
    scaled = [(mono_mul(m, t), cg * neg % p) for m, cg in g]
    return _merge(r, scaled, ring)


def poly_axpy(r: Polynomial, c: FieldElem, t: Monomial, g: Polynomial) -> Polynomial:
    """Return r - c*t*g with terms merged, cancellations removed, order kept."""
    r._check_ring(g)
    return Polynomial(r.ring, tuple(axpy_terms(r.terms, c, t, g.terms, r.ring)))


def lt_lm_lc(f: Polynomial) -> tuple[Monomial, FieldElem]:
    """Leading monomial and coefficient; raises on the zero polynomial."""
    return f.lm, f.lc
