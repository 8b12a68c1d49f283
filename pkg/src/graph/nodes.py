"""Node functions for the solve pipeline."""

import logging
from typing import Any

from src.algebra.homogenize import dehomogenize, homogenize
from src.bench.harness import oracle_basis
from src.engines.base import create_engine
from src.engines.buchberger import complete_basis
from src.engines.interreduce import interreduce
from src.engines.verify import verify_groebner
from src.models.state import PipelineState

logger = logging.getLogger(__name__)


def prepare_node(state: PipelineState) -> dict[str, Any]:
    """Drop zero inputs and hand the system on unchanged."""
    polys = [f for f in state["input_polys"] if f]
    dropped = len(state["input_polys"]) - len(polys)
    events = [f"prepare: {len(polys)} generator(s)"]
    if dropped:
        events.append(f"prepare: dropped {dropped} zero polynomial(s)")
    return {"work_polys": polys, "events": events}


def homogenize_node(state: PipelineState) -> dict[str, Any]:
    """Replace the system by its homogenization."""
    work = homogenize(state["work_polys"])
    names = ",".join(work[0].ring.names) if work else "-"
    return {"work_polys": work, "events": [f"homogenize: {len(work)} polynomial(s) in {names}"]}


def compute_node(state: PipelineState) -> dict[str, Any]:
    """Run the configured engine."""
    config = state["config"]
    work = state["work_polys"]
    if not work:
        return {"basis": [], "stats": None, "trace": [], "events": ["compute: zero ideal"]}
    result = create_engine(config).run(work)
    return {
        "basis": result.basis,
        "stats": result.stats,
        "trace": result.trace,
        "events": [f"compute: {config.label} gave {len(result.basis)} element(s)"],
    }


def dehomogenize_node(state: PipelineState) -> dict[str, Any]:
    """Set h = 1 in the basis."""
    basis = interreduce(dehomogenize(state["basis"]))
    return {
        "basis": basis,
        "dehomogenized": True,
        "events": [f"dehomogenize: {len(basis)} element(s) after interreduction"],
    }


def complete_node(state: PipelineState) -> dict[str, Any]:
    """Close the dehomogenized basis under Buchberger completion."""
    basis, added = complete_basis(state["basis"])
    stats = state["stats"]
    if stats is not None:
        stats = stats.model_copy(update={"completion_additions": added, "basis_size_final": len(basis)})
    if added:
        logger.warning(f"Completion added {added} element(s) after dehomogenization")
    return {
        "basis": basis,
        "stats": stats,
        "completion_added": added,
        "events": [f"complete: added {added} element(s)"],
    }


def verify_node(state: PipelineState) -> dict[str, Any]:
    """Check the basis against the oracle of the system it claims to generate."""
    if state["homogenize"] and not state["dehomogenized"]:
        target = state["work_polys"]
    else:
        target = [f for f in state["input_polys"] if f]
    basis = state["basis"]
    oracle = oracle_basis(target) if target else []
    verified = basis == oracle and verify_groebner(basis, target, oracle=oracle)
    return {"verified": verified, "events": [f"verify: {'passed' if verified else 'FAILED'}"]}


def finalize_node(state: PipelineState) -> dict[str, Any]:
    """Publish the basis sorted ascending by leading monomial."""
    basis = list(state["basis"] or [])
    if basis:
        ring = basis[0].ring
        basis.sort(key=lambda g: ring.key(g.lm))
    return {"output_basis": basis, "events": [f"finalize: {len(basis)} element(s)"]}
