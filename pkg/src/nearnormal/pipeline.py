"""End-to-end colouring pipeline.

Reduce parallel pairs and triangles until the graph is simple and
triangle-free (or the 2-vertex base case), take the 3-colouring shortcut
when one exists, otherwise run the selection-driven construction, then lift
the colouring back through the reduction stack.  The final medium count is
checked against the 4/5-per-vertex bound, strictly so off the Petersen
graph.
"""

from __future__ import annotations

from .colouring import (
    EdgeColouring,
    class_counts,
    construct_colouring,
    medium_count,
    try_3_edge_colouring,
)
from .discharging import run_audit
from .factor import DEFAULT_MATCHING_LIMIT, choose_two_factor
from .graph import GraphError, MultiGraph, validate_input
from .petersen import is_petersen_graph
from .report import ColouringReport
from .selection import find_optimal_selection, s_components


class BoundViolation(GraphError):
    """The final colouring broke the 4/5-per-vertex guarantee; either a bug
    or a mathematical sensation, and flagged loudly either way."""


def colour_graph(
    g: MultiGraph,
    name: str = "",
    matching_limit: int = DEFAULT_MATCHING_LIMIT,
    run_discharging_audit: bool = True,
) -> tuple[EdgeColouring, ColouringReport]:
    diag = validate_input(g)
    if not diag.ok:
        raise GraphError(f"invalid input ({diag.reason}): {diag.detail}")

    from .reductions import lift, reduce_fully

    base, records = reduce_fully(g)

    cycle_lengths = None
    selection_size = None
    shapes = None
    audit_passed = None
    audit_failures: tuple[str, ...] = ()

    colouring = try_3_edge_colouring(base)
    if colouring is not None:
        base_branch = "3-colourable"
    else:
        base_branch = "constructed"
        tf = choose_two_factor(base, matching_limit)
        odd = tf.odd_cycles()
        if len(odd) < 2:
            raise GraphError(
                "graph is not 3-edge-colourable yet its 2-factor has fewer "
                "than two odd cycles (bug)"
            )
        sel = find_optimal_selection(tf)
        colouring = construct_colouring(base, tf, sel)
        cycle_lengths = tuple(len(cyc) for cyc in tf.cycles)
        selection_size = len(sel.selected)
        shapes = tuple(comp.shape for comp in s_components(tf, sel))
        if run_discharging_audit:
            audit_report = run_audit(base, tf, sel, colouring)
            audit_passed = audit_report.passed
            audit_failures = tuple(
                f"{chk.name}: {chk.detail}" for chk in audit_report.checks if not chk.ok
            )

    for record in reversed(records):
        colouring = lift(record, colouring)

    counts = class_counts(g, colouring)
    mediums = counts["medium"]
    petersen = is_petersen_graph(g)
    bound_ok = 5 * mediums <= 4 * g.n
    bound_tight = 5 * mediums == 4 * g.n
    if not bound_ok:
        raise BoundViolation(
            f"{mediums} medium edges exceed 4/5 * {g.n} (would refute the bound)"
        )
    if bound_tight and not petersen:
        raise BoundViolation(
            f"bound is tight on a non-Petersen graph ({mediums} medium edges)"
        )

    report = ColouringReport(
        name=name,
        n=g.n,
        m=g.m,
        branch="reduced" if records else base_branch,
        reductions=tuple(r.kind for r in records),
        base_branch=base_branch,
        base_order=base.n,
        cycle_lengths=cycle_lengths,
        selection_size=selection_size,
        component_shapes=shapes,
        colours=colouring.colour_of,
        poor=counts["poor"],
        medium=mediums,
        rich=counts["rich"],
        bound_ok=bound_ok,
        bound_tight=bound_tight,
        is_petersen=petersen,
        audit_passed=audit_passed,
        audit_failures=audit_failures,
    )
    assert medium_count(g, colouring) == mediums
    return colouring, report
