"""Conditional edge logic for the solve pipeline."""

from typing import Literal

from src.models.state import PipelineState


def should_homogenize(state: PipelineState) -> Literal["homogenize", "compute"]:
    """Route through homogenization when it was requested."""
    if state.get("homogenize", False):
        return "homogenize"
    return "compute"


def after_compute(state: PipelineState) -> Literal["dehomogenize", "verify", "finalize"]:
    """Dehomogenize unless ``h`` is kept, then verify when asked.

    Args:
        state: Current graph state after the engine has run.

    Returns:
        The next stage.
    """
    if state.get("homogenize") and not state.get("keep_h") and state.get("basis"):
        return "dehomogenize"
    return should_verify(state)


def should_verify(state: PipelineState) -> Literal["verify", "finalize"]:
    if state.get("check", False):
        return "verify"
    return "finalize"
