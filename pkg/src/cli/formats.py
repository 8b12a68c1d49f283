"""The text input format and polynomial rendering.

An input file starts with a header line::

    ring: p=32003 vars=x,y,z order=grevlex

followed by one polynomial per line. Blank lines and lines starting with
``#`` are ignored. A polynomial is a sum of terms joined by ``+``/``-``; a
term is a ``*``-joined product of integers, variables ``v`` and powers
``v^k``.
"""

import re
from typing import Optional, Sequence

from src.algebra.coeff import PrimeField
from src.algebra.polyring import Monomial, Polynomial, PolyRing
from src.config.constants import MAX_EXPONENT
from src.config.settings import get_settings
from src.errors import ParseError, UnknownVariableError
from src.models.algebra import OrderingKind

_HEADER = re.compile(r"^\s*ring\s*:(.*)$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_TOKEN = re.compile(r"\s+|(?P<int>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[+\-*^])|(?P<bad>.)")


# ============================================================================
# Parsing
# ============================================================================


def parse_header(line: str, lineno: int = 1, source: Optional[str] = None) -> PolyRing:
    """Build the ring declared by a ``ring:`` header line."""
    match = _HEADER.match(line)
    if match is None:
        raise ParseError("expected header 'ring: p=<prime> vars=<v1,...> order=<grevlex|lex>'", lineno, 1, source)
    fields: dict[str, str] = {}
    offset = match.start(1)
    for item in re.finditer(r"\S+", match.group(1)):
        column = offset + item.start() + 1
        key, sep, value = item.group().partition("=")
        if not sep or not value:
            raise ParseError(f"expected key=value, got '{item.group()}'", lineno, column, source)
        if key not in ("p", "vars", "order"):
            raise ParseError(f"unknown header field '{key}'", lineno, column, source)
        fields[key] = value

    if "vars" not in fields:
        raise ParseError("header is missing vars=", lineno, 1, source)
    try:
        p = int(fields.get("p", get_settings().default_prime))
    except ValueError:
        raise ParseError(f"modulus '{fields['p']}' is not an integer", lineno, 1, source)
    names = fields["vars"].split(",")
    for name in names:
        if not _NAME.match(name):
            raise ParseError(f"bad variable name '{name}'", lineno, 1, source)
    if len(set(names)) != len(names):
        raise ParseError("duplicate variable names", lineno, 1, source)
    try:
        ordering = OrderingKind(fields.get("order", get_settings().default_ordering))
    except ValueError:
        raise ParseError(f"unknown ordering '{fields['order']}'", lineno, 1, source)
    return PolyRing(names, PrimeField(p), ordering)


def parse_polynomial(text: str, ring: PolyRing, lineno: int = 1, source: Optional[str] = None) -> Polynomial:
    """Parse one polynomial line in ``ring``; coefficients are reduced mod p."""
    index = {name: i for i, name in enumerate(ring.names)}
    tokens = []
    for tok in _TOKEN.finditer(text):
        kind = tok.lastgroup
        if kind is None:
            continue
        if kind == "bad":
            raise ParseError(f"unexpected character '{tok.group()}'", lineno, tok.start() + 1, source)
        tokens.append((kind, tok.group(), tok.start() + 1))
    end_column = len(text) + 1

    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else (None, None, end_column)

    def expect_int() -> int:
        nonlocal pos
        kind, value, column = peek()
        if kind != "int":
            raise ParseError("expected an integer", lineno, column, source)
        pos += 1
        return int(value)

    terms: list[tuple[list[int], int]] = []
    sign = 1
    kind, value, column = peek()
    if kind == "op" and value in "+-":
        sign = -1 if value == "-" else 1
        pos += 1
    while True:
        # term := factor ('*' factor)*
        coeff = sign
        exps = [0] * ring.nvars
        while True:
            kind, value, column = peek()
            if kind == "int":
                pos += 1
                coeff *= int(value)
            elif kind == "name":
                pos += 1
                if value not in index:
                    raise UnknownVariableError(value, lineno, column, source)
                power = 1
                if peek()[0] == "op" and peek()[1] == "^":
                    pos += 1
                    power = expect_int()
                exps[index[value]] += power
                if exps[index[value]] > MAX_EXPONENT:
                    raise ParseError(f"exponent of '{value}' exceeds {MAX_EXPONENT}", lineno, column, source)
            else:
                raise ParseError("expected a number or a variable", lineno, column, source)
            kind, value, column = peek()
            if kind == "op" and value == "*":
                pos += 1
                continue
            break
        terms.append((exps, coeff))

        kind, value, column = peek()
        if kind is None:
            break
        if kind == "op" and value in "+-":
            sign = -1 if value == "-" else 1
            pos += 1
            continue
        raise ParseError(f"unexpected '{value}'", lineno, column, source)

    return ring.from_terms(terms)


def parse_input(text: str, source: Optional[str] = None) -> tuple[PolyRing, list[Polynomial]]:
    """Parse a whole input file into its ring and polynomials."""
    ring: Optional[PolyRing] = None
    polys: list[Polynomial] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if ring is None:
            ring = parse_header(line, lineno, source)
            continue
        polys.append(parse_polynomial(line, ring, lineno, source))
    if ring is None:
        raise ParseError("missing ring header", 1, 1, source)
    return ring, polys


# ============================================================================
# Rendering
# ============================================================================


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    factors = []
    for name, e in zip(names, m[1:]):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)


def format_polynomial(f: Polynomial, raw: bool = False) -> str:
    """Render in the input grammar.

    Coefficients above p/2 are shown as subtractions unless ``raw``.
    """
    if not f:
        return "0"
    p = f.ring.p
    names = f.ring.names
    parts: list[str] = []
    for k, (m, c) in enumerate(f.terms):
        negative = not raw and c > p // 2
        magnitude = p - c if negative else c
        mono = format_monomial(m, names)
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        if k == 0:
            parts.append(f"-{body}" if negative else body)
        else:
            parts.append(f"- {body}" if negative else f"+ {body}")
    return " ".join(parts)


def format_header(ring: PolyRing) -> str:
    return f"ring: p={ring.p} vars={','.join(ring.names)} order={ring.ordering.kind.value}"


def format_basis(G: Sequence[Polynomial], raw: bool = False) -> str:
    """One polynomial per line, sorted ascending by leading monomial."""
    polys = [g for g in G if g]
    if polys:
        ring = polys[0].ring
        polys.sort(key=lambda g: ring.key(g.lm))
    return "\n".join(format_polynomial(g, raw) for g in polys)


def format_input(ring: PolyRing, polys: Sequence[Polynomial], raw: bool = False) -> str:
    """A complete input file for ``polys``."""
    lines = [format_header(ring)] + [format_polynomial(f, raw) for f in polys]
    return "\n".join(lines) + "\n"
