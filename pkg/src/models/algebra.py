"""Pydantic models describing coefficient fields and monomial orderings."""

import math
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, computed_field, field_validator

from src.config.constants import DEFAULT_PRIME, MODULUS_BOUND


def is_prime(p: int) -> bool:
    """Trial division up to sqrt(p)."""
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for d in range(3, math.isqrt(p) + 1, 2):
        if p % d == 0:
            return False
    return True


class OrderingKind(str, Enum):
    """Monomial ordering on the polynomial ring."""

    GREVLEX = "grevlex"
    LEX = "lex"


class SigOrderKind(str, Enum):
    """Module ordering used to compare signatures."""

    POT = "pot"  # position over term
    SCHREYER = "schreyer"


class FieldSpec(BaseModel):
    """A prime field GF(p) with 2 < p < 2^31."""

    model_config = ConfigDict(frozen=True)

    p: int = Field(
        default=DEFAULT_PRIME,
        gt=2,
        lt=MODULUS_BOUND,
        description="Prime modulus",
    )

    @field_validator("p")
    @classmethod
    def _check_prime(cls, value: int) -> int:
        if not is_prime(value):
            raise ValueError(f"modulus {value} is not prime")
        return value


class OrderingSpec(BaseModel):
    """A monomial ordering together with its derived properties."""

    model_config = ConfigDict(frozen=True)

    kind: OrderingKind = OrderingKind.GREVLEX

    @computed_field
    @property
    def degree_compatible(self) -> bool:
        return self.kind == OrderingKind.GREVLEX
