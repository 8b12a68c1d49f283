"""LangGraph PipelineState definition."""

from operator import add
from typing import Annotated, Any, Optional

from typing_extensions import TypedDict

from .engine import EngineConfig, RunStats, TraceEntry


class PipelineState(TypedDict):
    """State shared across the stages of the solve pipeline.

    ``events`` uses the ``add`` reducer so every stage appends its log lines.
    """

    # Input
    input_polys: list[Any]  # Polynomials as parsed
    config: EngineConfig
    homogenize: bool
    keep_h: bool  # skip dehomogenization when homogenizing
    check: bool  # verify against the oracle

    # Prepare / homogenize outputs
    work_polys: Optional[list[Any]]  # system handed to the engine

    # Compute outputs
    basis: Optional[list[Any]]  # current reduced basis
    stats: Optional[RunStats]
    trace: Optional[list[TraceEntry]]

    # Dehomogenize / complete outputs
    dehomogenized: bool
    completion_added: int

    # Verify outputs
    verified: Optional[bool]

    # Control flow
    events: Annotated[list, add]

    # Final output
    output_basis: Optional[list[Any]]


def get_initial_state(
    polys: list[Any],
    config: EngineConfig,
    homogenize: bool = False,
    keep_h: bool = False,
    check: bool = False,
) -> PipelineState:
    """Create initial state for one solve run."""
    return PipelineState(
        input_polys=list(polys),
        config=config,
        homogenize=homogenize,
        keep_h=keep_h,
        check=check,
        work_polys=None,
        basis=None,
        stats=None,
        trace=None,
        dehomogenized=False,
        completion_added=0,
        verified=None,
        events=[],
        output_basis=None,
    )
