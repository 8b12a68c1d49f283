"""Pydantic models for engine configuration and run statistics."""

from enum import Enum
from typing import Literal, Optional

from pydantic import BaseModel, ConfigDict, Field, computed_field

from .algebra import SigOrderKind


class Algorithm(str, Enum):
    """Groebner basis algorithm selected for a run."""

    SBA = "sba"
    F5_PRESORT = "f5_presort"
    BUCHBERGER_SUGAR = "buchberger_sugar"


class RewriteFlavor(str, Enum):
    """Implementation of the rewritable signature criterion."""

    ARRI_PERRY = "arri_perry"
    F5_RULE_LIST = "f5_rule_list"


class ReducerOrder(str, Enum):
    """Order in which reducer candidates are scanned."""

    INSERTION = "insertion"
    SIGNATURE = "signature"  # ascending reducer signature


class CriteriaPreset(str, Enum):
    """Named combinations of the two signature criteria."""

    NONE = "none"
    SYZ = "syz"
    REWRITE = "rewrite"
    ALL = "all"


# ============================================================================
# Engine configuration
# ============================================================================


class EngineConfig(BaseModel):
    """Configuration of a single engine run."""

    model_config = ConfigDict(frozen=True)

    algorithm: Algorithm = Algorithm.SBA
    sig_order: SigOrderKind = SigOrderKind.POT
    use_nonminimal_syzygy: bool = True
    use_rewritable: bool = True
    rewrite_flavor: RewriteFlavor = RewriteFlavor.ARRI_PERRY
    tail_reduce: bool = True
    sig_redundant_filter: bool = True
    reducer_order: ReducerOrder = ReducerOrder.INSERTION
    check_invariants: bool = Field(
        default=False,
        description="Verify per-step reduction contracts (test builds)",
    )
    timeout_seconds: Optional[float] = Field(default=None, gt=0)
    deterministic: Literal[True] = True

    @property
    def criteria(self) -> CriteriaPreset:
        if self.use_nonminimal_syzygy and self.use_rewritable:
            return CriteriaPreset.ALL
        if self.use_nonminimal_syzygy:
            return CriteriaPreset.SYZ
        if self.use_rewritable:
            return CriteriaPreset.REWRITE
        return CriteriaPreset.NONE

    @property
    def label(self) -> str:
        """Short human-readable variant name, e.g. ``sba/pot/all/ap``."""
        if self.algorithm == Algorithm.BUCHBERGER_SUGAR:
            return "buchberger_sugar"
        flavor = "ap" if self.rewrite_flavor == RewriteFlavor.ARRI_PERRY else "f5"
        return f"{self.algorithm.value}/{self.sig_order.value}/{self.criteria.value}/{flavor}"

    @classmethod
    def with_criteria(cls, preset: CriteriaPreset | str, **kwargs) -> "EngineConfig":
        """Build a config whose criteria flags follow a named preset."""
        preset = CriteriaPreset(preset)
        return cls(
            use_nonminimal_syzygy=preset in (CriteriaPreset.SYZ, CriteriaPreset.ALL),
            use_rewritable=preset in (CriteriaPreset.REWRITE, CriteriaPreset.ALL),
            **kwargs,
        )


# ============================================================================
# Run statistics
# ============================================================================


class TraceEntry(BaseModel):
    """One processed critical pair, recorded when it leaves the queue.

    The signature fields stay unset for the sugar engine.
    """

    model_config = ConfigDict(frozen=True)

    sig_mono: Optional[tuple[int, ...]] = Field(
        default=None, description="Degree-prefixed exponents of the signature term"
    )
    sig_idx: Optional[int] = Field(default=None, ge=1)
    sig_deg: Optional[int] = Field(default=None, ge=0)
    pair_deg: int = Field(ge=0)
    spoly_deg: int = Field(default=-1, ge=-1, description="-1 for a zero s-polynomial")
    sugar: int = Field(ge=0)


class RunStats(BaseModel):
    """Counters collected during one engine run."""

    reduction_steps: int = 0
    higher_sig_detections: int = 0
    spoly_reductions: int = 0
    zero_reductions: int = 0
    discarded_nonminimal_pair: int = 0
    discarded_syzygy_criterion: int = 0
    discarded_rewritable: int = 0
    sig_redundant_skips: int = 0
    basis_size_final: int = 0
    elapsed_ms: float = 0.0

    # Buchberger (Gebauer-Moeller) criteria
    discarded_product_criterion: int = 0
    discarded_chain_criterion: int = 0

    # Invariant audits
    pairs_created: int = 0
    signature_order_violations: int = 0
    relation_violations: int = 0
    strict_relation_events: int = 0
    homogeneous_equality_violations: int = 0
    sugar_sigdeg_violations: int = 0
    sugar_sigdeg_excess: int = 0
    sugar_below_sigdeg: int = 0

    completion_additions: int = 0
    max_basis_size: int = 0
    homogeneous_input: bool = False

    @computed_field
    @property
    def ratio_pct(self) -> float:
        """Higher-signature detections per reduction step, in percent."""
        if self.reduction_steps == 0:
            return 0.0
        return 100.0 * self.higher_sig_detections / self.reduction_steps

    def deterministic_view(self) -> dict:
        """All counters except wall time (used for determinism checks)."""
        return self.model_dump(exclude={"elapsed_ms"})
