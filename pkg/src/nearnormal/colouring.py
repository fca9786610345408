"""Edge colourings: classification, the 3-colouring shortcut, and the
construction that colours the matching 4, gives every odd cycle exactly one
colour-3 edge, and fills the rest with {1,2} paths.

Colours are integers 1..k.  An edge is poor/medium/rich according to how many
distinct colours its adjacent edges carry (2/3/4); a colouring with no medium
edge is normal.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .factor import TwoFactor
from .graph import GraphError, MultiGraph, adjacent_edges, girth
from .selection import CYCLE, EdgeSelection, s_components, selection_violation

POOR = "poor"
MEDIUM = "medium"
RICH = "rich"


class ColouringError(GraphError):
    """Improper colouring or an infeasible construction step."""


@dataclass(frozen=True)
class EdgeColouring:
    """Total edge colouring with palette ``1..k``."""

    k: int
    colour_of: tuple[int, ...]

    def __post_init__(self):
        for col in self.colour_of:
            if col < 1 or col > self.k:
                raise ColouringError(f"colour {col} outside palette 1..{self.k}")


def is_proper(g: MultiGraph, c: EdgeColouring) -> bool:
    if len(c.colour_of) != g.m:
        return False
    for v in range(g.n):
        cols = [c.colour_of[e] for e in g.incident_edges(v)]
        if len(set(cols)) != len(cols):
            return False
    return True


def check_proper(g: MultiGraph, c: EdgeColouring) -> None:
    if not is_proper(g, c):
        raise ColouringError("colouring is not proper")


def classify_edge(g: MultiGraph, c: EdgeColouring, e: int) -> str:
    """poor / medium / rich from the colours adjacent to ``e``."""
    nbhd = adjacent_edges(g, e)
    own = c.colour_of[e]
    seen = set()
    for x in nbhd.adjacent_ids:
        if c.colour_of[x] == own:
            raise ColouringError(f"edges {e} and {x} share a vertex and a colour")
        seen.add(c.colour_of[x])
    if len(seen) == 2:
        return POOR
    if len(seen) == 4:
        return RICH
    return MEDIUM


def classify_all(g: MultiGraph, c: EdgeColouring) -> tuple[str, ...]:
    check_proper(g, c)
    return tuple(classify_edge(g, c, e) for e in range(g.m))


def class_counts(g: MultiGraph, c: EdgeColouring) -> dict[str, int]:
    classes = classify_all(g, c)
    return {
        POOR: classes.count(POOR),
        MEDIUM: classes.count(MEDIUM),
        RICH: classes.count(RICH),
    }


def medium_count(g: MultiGraph, c: EdgeColouring) -> int:
    return class_counts(g, c)[MEDIUM]


def _bfs_edge_order(g: MultiGraph) -> list[int]:
    """Edges ordered so neighbourhoods complete early (helps backtracking)."""
    order: list[int] = []
    seen_edge = [False] * g.m
    seen_vertex = [False] * g.n
    for start in range(g.n):
        if seen_vertex[start]:
            continue
        seen_vertex[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for e in sorted(g.incident_edges(v), key=lambda x: (g.other_end(x, v), x)):
                if not seen_edge[e]:
                    seen_edge[e] = True
                    order.append(e)
                w = g.other_end(e, v)
                if not seen_vertex[w]:
                    seen_vertex[w] = True
                    queue.append(w)
    return order


def try_3_edge_colouring(g: MultiGraph) -> EdgeColouring | None:
    """Exact backtracking; ``None`` when no proper 3-edge-colouring exists.

    Colour symmetry is broken by pinning the first vertex's edges to
    colours 1, 2, 3 in edge-id order (sound: any proper colouring can be
    renamed to match).
    """
    if g.m == 0:
        return EdgeColouring(3, ())
    order = _bfs_edge_order(g)
    forced: dict[int, int] = {}
    if g.n and g.degree(0) == 3:
        for col, e in enumerate(sorted(g.incident_edges(0)), start=1):
            forced[e] = col
    nbr_ids = [adjacent_edges(g, e).adjacent_ids for e in range(g.m)]
    colours = [0] * g.m

    def place(i: int) -> bool:
        if i == len(order):
            return True
        e = order[i]
        options = (forced[e],) if e in forced else (1, 2, 3)
        blocked = {colours[x] for x in nbr_ids[e] if colours[x]}
        for col in options:
            if col in blocked:
                continue
            colours[e] = col
            if place(i + 1):
                return True
            colours[e] = 0
        return False

    if place(0):
        return EdgeColouring(3, tuple(colours))
    return None


# ---------------------------------------------------------------------------
# the construction


def _attachments(tf: TwoFactor, sel: EdgeSelection) -> dict[int, list[int]]:
    """Per cycle, the vertices where selected edges attach (sorted)."""
    att: dict[int, list[int]] = {}
    for e in sorted(sel.selected):
        for x in tf.graph.endpoints(e):
            att.setdefault(tf.cycle_of_vertex[x], []).append(x)
    return att


def place_colour_3(tf: TwoFactor, sel: EdgeSelection) -> dict[int, int]:
    """Choose the colour-3 edge of every odd cycle.

    The chosen edge must be adjacent to every selected edge at the cycle:
    for degree 2 that forces the edge between the two (consecutive)
    attachment vertices; for degree 1 we fix the successor edge at the
    attachment; for degree 0 the edge between positions 0 and 1.
    """
    violation = selection_violation(tf, sel.selected)
    if violation is not None:
        raise ColouringError(f"invalid selection: {violation}")
    att = _attachments(tf, sel)
    placed: dict[int, int] = {}
    for c in tf.odd_cycles():
        ell = tf.cycle_length(c)
        points = att.get(c, [])
        if not points:
            placed[c] = tf.cycle_edges[c][0]
        elif len(points) == 1:
            p = tf.position_on_cycle(c, points[0])
            placed[c] = tf.cycle_edges[c][p]
        else:
            p1 = tf.position_on_cycle(c, points[0])
            p2 = tf.position_on_cycle(c, points[1])
            if (p2 - p1) % ell == 1:
                placed[c] = tf.cycle_edges[c][p1]
            elif (p1 - p2) % ell == 1:
                placed[c] = tf.cycle_edges[c][p2]
            else:
                raise ColouringError(f"attachments on cycle {c} are not consecutive")
    return placed


def _path_edges(tf: TwoFactor, c: int, three_edge: int) -> list[int]:
    """Cycle edges of ``c`` minus the colour-3 edge, in traversal order
    starting just after it."""
    eids = tf.cycle_edges[c]
    i = eids.index(three_edge)
    ell = len(eids)
    return [eids[(i + 1 + t) % ell] for t in range(ell - 1)]


def _flank_parity(tf: TwoFactor, c: int, vertex: int, three_edge: int) -> int:
    """Position parity, along the {1,2} path, of the cycle edge at ``vertex``
    that is not the colour-3 edge.  The parity decides which of the two
    alternating colours the flank receives for a given phase."""
    ell = tf.cycle_length(c)
    p = tf.position_on_cycle(c, vertex)
    succ = tf.cycle_edges[c][p]
    pred = tf.cycle_edges[c][(p - 1) % ell]
    flank = pred if succ == three_edge else succ
    if flank == three_edge:
        raise ColouringError(f"vertex {vertex} has no flank edge on cycle {c}")
    i = tf.cycle_edges[c].index(three_edge)
    j = tf.cycle_edges[c].index(flank)
    return ((j - i - 1) % ell) & 1


def solve_path_phases(
    tf: TwoFactor, sel: EdgeSelection, three_edges: dict[int, int]
) -> tuple[dict[int, int], frozenset[int]]:
    """Colour the odd-cycle paths with {1,2}.

    One boolean phase per odd cycle; every selected edge imposes an
    equality/inequality constraint between the phases of its two cycles
    (equal flank colours make it poor).  Components whose quotient is not an
    odd cycle admit an all-poor solution; on an odd quotient cycle exactly
    one constraint must break, and it is placed on the smallest associated
    edge id.  Returns the path colours and the designated medium edges.
    """
    g = tf.graph
    phase: dict[int, int] = {}
    designated: set[int] = set()
    for comp in s_components(tf, sel):
        if not comp.associated_edges:
            only = next(iter(comp.cycles))
            if tf.cycle_length(only) % 2:
                phase[only] = 0
            continue
        skip = None
        if comp.shape == CYCLE and len(comp.cycles) % 2 == 1:
            skip = min(comp.associated_edges)
            designated.add(skip)
        constraints: dict[int, list[tuple[int, int]]] = {c: [] for c in comp.cycles}
        all_constraints = []
        for e in sorted(comp.associated_edges):
            u, v = g.endpoints(e)
            cu, cv = tf.cycle_of_vertex[u], tf.cycle_of_vertex[v]
            rel = _flank_parity(tf, cu, u, three_edges[cu]) ^ _flank_parity(
                tf, cv, v, three_edges[cv]
            )
            all_constraints.append((e, cu, cv, rel))
            if e != skip:
                constraints[cu].append((cv, rel))
                constraints[cv].append((cu, rel))
        root = min(comp.cycles)
        phase[root] = 0
        queue = deque([root])
        while queue:
            c = queue.popleft()
            for d, rel in constraints[c]:
                want = phase[c] ^ rel
                if d not in phase:
                    phase[d] = want
                    queue.append(d)
                elif phase[d] != want:
                    raise ColouringError(
                        "phase constraints are infeasible on a component whose "
                        "quotient is not an odd cycle (upstream bug)"
                    )
        if any(c not in phase for c in comp.cycles):
            raise ColouringError("component not spanned by its constraints")
        if skip is not None:
            e, cu, cv, rel = next(t for t in all_constraints if t[0] == skip)
            if (phase[cu] ^ phase[cv]) == rel:
                raise ColouringError(
                    "odd quotient cycle unexpectedly satisfiable (upstream bug)"
                )
    colours: dict[int, int] = {}
    for c in tf.odd_cycles():
        b = phase.get(c, 0)
        for t, e in enumerate(_path_edges(tf, c, three_edges[c])):
            colours[e] = 1 + ((t & 1) ^ b)
    return colours, frozenset(designated)


def construct_colouring(g: MultiGraph, tf: TwoFactor, sel: EdgeSelection) -> EdgeColouring:
    """The 4-edge-colouring with the construction's five properties:

    * matching edges are exactly the colour-4 edges;
    * colour 3 appears only on odd cycles, exactly once per odd cycle;
    * every selected edge is adjacent to two colour-3 edges;
    * a selected edge is medium only in a component whose quotient is an
      odd cycle, and then it is the unique one there.
    """
    if tf.graph != g:
        raise ColouringError("two-factor belongs to a different graph")
    if not g.is_simple():
        raise ColouringError("construction requires a simple graph")
    if girth(g) == 3:
        raise ColouringError("construction requires a triangle-free graph")
    cols = [0] * g.m
    for e in tf.matching:
        cols[e] = 4
    for c, cyc in enumerate(tf.cycles):
        if len(cyc) % 2 == 0:
            for t, e in enumerate(tf.cycle_edges[c]):
                cols[e] = 1 + (t & 1)
    three = place_colour_3(tf, sel)
    for c, e in three.items():
        cols[e] = 3
    path_cols, _designated = solve_path_phases(tf, sel, three)
    for e, col in path_cols.items():
        cols[e] = col
    if any(col == 0 for col in cols):
        raise ColouringError("construction left an edge uncoloured")
    colouring = EdgeColouring(4, tuple(cols))
    check_proper(g, colouring)
    problems = construction_violations(g, tf, sel, colouring)
    if problems:
        raise ColouringError("constructed colouring violates: " + "; ".join(problems))
    return colouring


def bullet_violations(
    g: MultiGraph, tf: TwoFactor, sel: EdgeSelection, c: EdgeColouring
) -> list[str]:
    """Audit the five structural properties of the construction."""
    out: list[str] = []
    classes = classify_all(g, c)
    for e in range(g.m):
        if (e in tf.matching) != (c.colour_of[e] == 4):
            out.append(f"edge {e}: colour-4 does not coincide with the matching")
    odd = set(tf.odd_cycles())
    cycle_of_edge: dict[int, int] = {}
    for idx, eids in enumerate(tf.cycle_edges):
        for e in eids:
            cycle_of_edge[e] = idx
    for e in range(g.m):
        if c.colour_of[e] == 3:
            cyc = cycle_of_edge.get(e)
            if cyc is None or cyc not in odd:
                out.append(f"edge {e}: colour 3 off the odd cycles")
    for cyc in range(len(tf.cycles)):
        threes = sum(1 for e in tf.cycle_edges[cyc] if c.colour_of[e] == 3)
        want = 1 if cyc in odd else 0
        if threes != want:
            out.append(f"cycle {cyc}: {threes} colour-3 edges, expected {want}")
    for e in sorted(sel.selected):
        adj3 = sum(
            1 for x in adjacent_edges(g, e).adjacent_ids if c.colour_of[x] == 3
        )
        if adj3 != 2:
            out.append(f"selected edge {e}: adjacent to {adj3} colour-3 edges")
    medium_sel = {e for e in sel.selected if classes[e] == MEDIUM}
    for comp in s_components(tf, sel):
        inside = medium_sel & comp.associated_edges
        odd_quotient = comp.shape == CYCLE and len(comp.cycles) % 2 == 1
        want = 1 if odd_quotient else 0
        if len(inside) != want:
            out.append(
                f"component {sorted(comp.cycles)}: {len(inside)} medium selected "
                f"edges, expected {want}"
            )
    return out


def fact_one_violations(g: MultiGraph, tf: TwoFactor, c: EdgeColouring) -> list[str]:
    """Per-cycle medium counts: 0 on even cycles, exactly 3 on odd ones."""
    out: list[str] = []
    classes = classify_all(g, c)
    for cyc, eids in enumerate(tf.cycle_edges):
        mediums = sum(1 for e in eids if classes[e] == MEDIUM)
        want = 3 if len(eids) % 2 else 0
        if mediums != want:
            out.append(f"cycle {cyc}: {mediums} medium cycle edges, expected {want}")
    return out


def construction_violations(
    g: MultiGraph, tf: TwoFactor, sel: EdgeSelection, c: EdgeColouring
) -> list[str]:
    """Five-bullet audit plus the per-cycle medium counts; empty means clean."""
    return bullet_violations(g, tf, sel, c) + fact_one_violations(g, tf, c)
