"""Edge selections: subsets of the perfect matching joining distinct odd
cycles, at most two per cycle and consecutive when two.

The search returns a globally optimal selection (maximum size, then maximum
number of degree-2 cycles, then lexicographically smallest edge-id set).
Global optimality matters: the charge audit leans on swap-maximality facts
that only hold for optimal selections.
"""

from __future__ import annotations

from dataclasses import dataclass

from .factor import TwoFactor
from .graph import GraphError

SINGLETON = "singleton"
PATH = "path"
CYCLE = "cycle"
DOUBLE_EDGE = "double_edge"


@dataclass(frozen=True)
class EdgeSelection:
    selected: frozenset[int]
    degree_of_cycle: tuple[int, ...]


@dataclass(frozen=True)
class SComponent:
    """Maximal set of cycles connected through selected edges; ``shape``
    classifies the quotient multigraph on the member cycles."""

    cycles: frozenset[int]
    associated_edges: frozenset[int]
    shape: str


def eligible_edges(tf: TwoFactor) -> set[int]:
    """Matching edges whose endpoints lie on two distinct odd cycles."""
    odd = set(tf.odd_cycles())
    out = set()
    for e in tf.matching:
        u, v = tf.graph.endpoints(e)
        cu, cv = tf.cycle_of_vertex[u], tf.cycle_of_vertex[v]
        if cu != cv and cu in odd and cv in odd:
            out.add(e)
    return out


def _end_on_cycle(tf: TwoFactor, e: int, c: int) -> int:
    u, v = tf.graph.endpoints(e)
    on = [x for x in (u, v) if tf.cycle_of_vertex[x] == c]
    if len(on) != 1:
        raise GraphError(f"edge {e} does not have exactly one endpoint on cycle {c}")
    return on[0]


def consecutive(tf: TwoFactor, e1: int, e2: int, c: int) -> bool:
    """Whether the endpoints of ``e1`` and ``e2`` on cycle ``c`` are adjacent
    in its cyclic order.  Chords are rejected by the one-endpoint rule."""
    if e1 == e2:
        raise GraphError("consecutiveness needs two distinct edges")
    p1 = tf.position_on_cycle(c, _end_on_cycle(tf, e1, c))
    p2 = tf.position_on_cycle(c, _end_on_cycle(tf, e2, c))
    ell = tf.cycle_length(c)
    return (p1 - p2) % ell in (1, ell - 1)


def selection_violation(tf: TwoFactor, selected) -> str | None:
    """Name the first violated defining property, or None if valid.

    This re-checks the three properties directly from the definitions; the
    optimiser never uses it, so tests can play it against the search.
    """
    odd = set(tf.odd_cycles())
    per_cycle: dict[int, list[int]] = {}
    for e in sorted(selected):
        if e not in tf.matching:
            return f"edge {e} is not a matching edge"
        u, v = tf.graph.endpoints(e)
        cu, cv = tf.cycle_of_vertex[u], tf.cycle_of_vertex[v]
        if cu == cv:
            return f"edge {e} is a chord"
        if cu not in odd or cv not in odd:
            return f"edge {e} touches an even cycle"
        per_cycle.setdefault(cu, []).append(e)
        per_cycle.setdefault(cv, []).append(e)
    for c, es in per_cycle.items():
        if len(es) > 2:
            return f"cycle {c} is incident to {len(es)} selected edges"
        if len(es) == 2 and not consecutive(tf, es[0], es[1], c):
            return f"selected edges at cycle {c} are not consecutive"
    return None


def _degrees(tf: TwoFactor, selected) -> tuple[int, ...]:
    deg = [0] * len(tf.cycles)
    for e in selected:
        u, v = tf.graph.endpoints(e)
        deg[tf.cycle_of_vertex[u]] += 1
        deg[tf.cycle_of_vertex[v]] += 1
    return tuple(deg)


def find_optimal_selection(tf: TwoFactor) -> EdgeSelection:
    """Exact branch-and-bound over the eligible edges.

    Pass one maximises the selection size; pass two, restricted to that
    size, maximises the number of degree-2 cycles.  Edges are branched in
    increasing id order with the include-branch first, so the first
    selection reaching the best score is the lexicographically smallest.
    """
    edges = sorted(eligible_edges(tf))
    g = tf.graph
    ncyc = len(tf.cycles)
    side: list[tuple[tuple[int, int], tuple[int, int]]] = []
    for e in edges:
        u, v = g.endpoints(e)
        side.append(((tf.cycle_of_vertex[u], u), (tf.cycle_of_vertex[v], v)))

    deg = [0] * ncyc
    ends: list[list[int]] = [[] for _ in range(ncyc)]  # attachment vertices
    chosen: list[int] = []

    def fits(i: int) -> bool:
        for c, vertex in side[i]:
            if deg[c] == 2:
                return False
            if deg[c] == 1:
                p1 = tf.position_on_cycle(c, ends[c][0])
                p2 = tf.position_on_cycle(c, vertex)
                ell = tf.cycle_length(c)
                if (p1 - p2) % ell not in (1, ell - 1):
                    return False
        return True

    def push(i: int) -> None:
        chosen.append(edges[i])
        for c, vertex in side[i]:
            deg[c] += 1
            ends[c].append(vertex)

    def pop(i: int) -> None:
        chosen.pop()
        for c, _vertex in side[i]:
            deg[c] -= 1
            ends[c].pop()

    best_size = 0

    def max_size(i: int) -> None:
        nonlocal best_size
        best_size = max(best_size, len(chosen))
        if i == len(edges) or len(chosen) + (len(edges) - i) <= best_size:
            return
        if fits(i):
            push(i)
            max_size(i + 1)
            pop(i)
        max_size(i + 1)

    max_size(0)

    best: tuple[int, frozenset[int]] | None = None

    def max_deg2(i: int) -> None:
        nonlocal best
        remaining = len(edges) - i
        needed = best_size - len(chosen)
        if needed > remaining:
            return
        if needed == 0:
            score = sum(1 for d in deg if d == 2)
            if best is None or score > best[0]:
                best = (score, frozenset(chosen))
            return
        # each extra edge can raise at most two cycles to degree 2
        if best is not None:
            bound = sum(1 for d in deg if d == 2) + 2 * needed
            if bound < best[0]:
                return
        if fits(i):
            push(i)
            max_deg2(i + 1)
            pop(i)
        max_deg2(i + 1)

    max_deg2(0)
    assert best is not None
    selected = best[1]
    violation = selection_violation(tf, selected)
    if violation is not None:
        raise GraphError(f"search produced an invalid selection: {violation}")
    return EdgeSelection(selected=selected, degree_of_cycle=_degrees(tf, selected))


def s_components(tf: TwoFactor, sel: EdgeSelection) -> list[SComponent]:
    """Partition of all cycles under selected-edge adjacency, with the shape
    of each component's quotient multigraph."""
    ncyc = len(tf.cycles)
    adj: dict[int, list[tuple[int, int]]] = {c: [] for c in range(ncyc)}
    for e in sorted(sel.selected):
        u, v = tf.graph.endpoints(e)
        cu, cv = tf.cycle_of_vertex[u], tf.cycle_of_vertex[v]
        adj[cu].append((cv, e))
        adj[cv].append((cu, e))
    seen = [False] * ncyc
    out: list[SComponent] = []
    for start in range(ncyc):
        if seen[start]:
            continue
        comp = {start}
        edges: set[int] = set()
        stack = [start]
        seen[start] = True
        while stack:
            c = stack.pop()
            for d, e in adj[c]:
                edges.add(e)
                if not seen[d]:
                    seen[d] = True
                    comp.add(d)
                    stack.append(d)
        out.append(
            SComponent(
                cycles=frozenset(comp),
                associated_edges=frozenset(edges),
                shape=_shape(comp, edges, adj),
            )
        )
    return out


def _shape(comp: set[int], edges: set[int], adj) -> str:
    if len(comp) == 1:
        return SINGLETON
    if len(comp) == 2 and len(edges) == 2:
        return DOUBLE_EDGE
    if all(len(adj[c]) == 2 for c in comp):
        return CYCLE
    return PATH
