"""LangGraph StateGraph definition for the solve pipeline."""

from typing import Sequence

from langgraph.graph import END, StateGraph

from src.algebra.polyring import Polynomial
from src.graph.edges import after_compute, should_homogenize, should_verify
from src.graph.nodes import (
    complete_node,
    compute_node,
    dehomogenize_node,
    finalize_node,
    homogenize_node,
    prepare_node,
    verify_node,
)
from src.models.engine import EngineConfig
from src.models.state import PipelineState, get_initial_state


def create_solve_graph():
    """Create the solve workflow.

    The graph follows this flow:
    1. Prepare: drop zero generators
    2. Homogenize (optional): pad with the homogenizing variable
    3. Compute: run the configured engine
    4. Dehomogenize + Complete (when homogenized and h is not kept):
       set h = 1, interreduce and close under Buchberger completion
    5. Verify (optional): compare with the oracle and run the checks
    6. Finalize: sort the basis for output

    Returns:
        Compiled StateGraph ready for invocation.
    """
    workflow = StateGraph(PipelineState)

    workflow.add_node("prepare", prepare_node)
    workflow.add_node("homogenize", homogenize_node)
    workflow.add_node("compute", compute_node)
    workflow.add_node("dehomogenize", dehomogenize_node)
    workflow.add_node("complete", complete_node)
    workflow.add_node("verify", verify_node)
    workflow.add_node("finalize", finalize_node)

    workflow.set_entry_point("prepare")

    workflow.add_conditional_edges(
        "prepare",
        should_homogenize,
        {
            "homogenize": "homogenize",
            "compute": "compute",
        },
    )
    workflow.add_edge("homogenize", "compute")

    workflow.add_conditional_edges(
        "compute",
        after_compute,
        {
            "dehomogenize": "dehomogenize",
            "verify": "verify",
            "finalize": "finalize",
        },
    )
    workflow.add_edge("dehomogenize", "complete")
    workflow.add_conditional_edges(
        "complete",
        should_verify,
        {
            "verify": "verify",
            "finalize": "finalize",
        },
    )
    workflow.add_edge("verify", "finalize")
    workflow.add_edge("finalize", END)

    return workflow.compile()


def solve(
    polys: Sequence[Polynomial],
    config: EngineConfig,
    homogenize: bool = False,
    keep_h: bool = False,
    check: bool = False,
    graph=None,
) -> PipelineState:
    """Run the solve pipeline and return its final state.

    Args:
        polys: Input system.
        config: Engine configuration.
        homogenize: Compute via the homogenized system.
        keep_h: With ``homogenize``, return the homogeneous basis as is.
        check: Verify the result against the oracle.
        graph: Optional pre-created graph.

    Returns:
        Final state dictionary; ``output_basis`` holds the sorted basis.
    """
    if graph is None:
        graph = create_solve_graph()
    initial_state = get_initial_state(list(polys), config, homogenize, keep_h, check)
    return graph.invoke(initial_state)
