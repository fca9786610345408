"""Induction-step rewrites: eliminate a parallel pair, or contract a
triangle, each shrinking the graph by two vertices.

Both rewrites come with a colour lift that turns any proper 4-edge-colouring
of the reduced graph into one of the original graph without increasing the
number of medium edges: the lifted edges all come out poor, and every
surviving edge keeps the colour multiset of its neighbourhood.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colouring import EdgeColouring, check_proper, medium_count
from .graph import GraphError, MultiGraph, find_bridges, is_connected

MULTI_EDGE = "multi_edge"
TRIANGLE = "triangle"


@dataclass(frozen=True)
class ReductionRecord:
    """One rewrite step with the data needed to lift colourings back.

    ``shared`` maps each edge id of the reduced graph that survives from the
    original graph to its original id.  The kind-specific fields identify
    the rewritten site on both sides.
    """

    kind: str
    original: MultiGraph
    reduced: MultiGraph
    shared: tuple[tuple[int, int], ...]  # (reduced id, original id)
    # multi_edge fields
    new_edge: int = -1                   # reduced id of the replacement edge
    pair: tuple[int, int] = (-1, -1)     # original ids of the parallel pair
    spokes: tuple[int, ...] = ()         # original ids v1u1, v2u2 (triangle: v_iu_i)
    anchor_edges: tuple[int, int] = (-1, -1)  # reduced ids at u1 other than new_edge
    # triangle fields
    x_edges: tuple[int, ...] = ()        # reduced ids of the star at x, i-aligned
    triangle_edges: tuple[int, ...] = () # original ids v0v1, v1v2, v2v0


def _assert_still_valid(g: MultiGraph, what: str) -> None:
    # the rewrite is supposed to preserve these; failing here is a bug
    if not is_connected(g):
        raise GraphError(f"{what} produced a disconnected graph")
    if not g.is_cubic():
        raise GraphError(f"{what} produced a non-cubic graph")
    if find_bridges(g):
        raise GraphError(f"{what} produced a bridge")


def find_parallel_pair(g: MultiGraph) -> tuple[int, int] | None:
    """Smallest doubled vertex pair, or None for a simple graph."""
    counts: dict[tuple[int, int], int] = {}
    for pair in g.edges:
        counts[pair] = counts.get(pair, 0) + 1
    doubled = sorted(p for p, c in counts.items() if c == 2)
    if any(c >= 3 for c in counts.values()):
        raise GraphError("triple edge only occurs in the 2-vertex base case")
    return doubled[0] if doubled else None


def reduce_multi_edge(g: MultiGraph) -> ReductionRecord | None:
    """Remove a doubled pair v1,v2 and splice their outside neighbours
    together with a new edge; returns None when the graph is simple."""
    if g.n <= 2:
        raise GraphError("the 2-vertex multigraph is a base case, not reducible")
    site = find_parallel_pair(g)
    if site is None:
        return None
    v1, v2 = site
    e1, e2 = sorted(g.edges_between(v1, v2))
    spoke1 = next(e for e in g.incident_edges(v1) if e not in (e1, e2))
    spoke2 = next(e for e in g.incident_edges(v2) if e not in (e1, e2))
    u1 = g.other_end(spoke1, v1)
    u2 = g.other_end(spoke2, v2)
    if u1 == u2:
        raise GraphError("outside neighbours coincide; graph cannot be bridgeless")

    relabel = {}
    for v in range(g.n):
        if v not in (v1, v2):
            relabel[v] = len(relabel)
    new_edges: list[tuple[int, int]] = []
    shared: list[tuple[int, int]] = []
    for eid, (a, b) in enumerate(g.edges):
        if v1 in (a, b) or v2 in (a, b):
            continue
        shared.append((len(new_edges), eid))
        new_edges.append((relabel[a], relabel[b]))
    new_edge = len(new_edges)
    new_edges.append((relabel[u1], relabel[u2]))
    reduced = MultiGraph(g.n - 2, new_edges)
    _assert_still_valid(reduced, "multi-edge reduction")

    u1r = relabel[u1]
    anchor = tuple(e for e in reduced.incident_edges(u1r) if e != new_edge)
    if len(anchor) != 2:
        raise GraphError("anchor vertex lost an edge during reduction")
    return ReductionRecord(
        kind=MULTI_EDGE,
        original=g,
        reduced=reduced,
        shared=tuple(shared),
        new_edge=new_edge,
        pair=(e1, e2),
        spokes=(spoke1, spoke2),
        anchor_edges=(anchor[0], anchor[1]),
    )


def lift_multi_edge(record: ReductionRecord, reduced_colouring: EdgeColouring) -> EdgeColouring:
    """Transfer a proper colouring across the splice: both spokes take the
    new edge's colour, the parallel pair takes the two other colours seen at
    the anchor endpoint (in increasing order)."""
    if record.kind != MULTI_EDGE:
        raise GraphError("record is not a multi-edge reduction")
    check_proper(record.reduced, reduced_colouring)
    cols = [0] * record.original.m
    for rid, oid in record.shared:
        cols[oid] = reduced_colouring.colour_of[rid]
    ce = reduced_colouring.colour_of[record.new_edge]
    a, b = sorted(reduced_colouring.colour_of[e] for e in record.anchor_edges)
    cols[record.spokes[0]] = ce
    cols[record.spokes[1]] = ce
    cols[record.pair[0]] = a
    cols[record.pair[1]] = b
    lifted = EdgeColouring(reduced_colouring.k, tuple(cols))
    check_proper(record.original, lifted)
    if medium_count(record.original, lifted) > medium_count(record.reduced, reduced_colouring):
        raise GraphError("lift increased the medium count")  # cannot happen
    return lifted


def find_triangle(g: MultiGraph) -> tuple[int, int, int] | None:
    """Lexicographically smallest triangle of a simple graph, or None."""
    best: tuple[int, int, int] | None = None
    for eid, (a, b) in enumerate(g.edges):
        common = set(g.neighbours(a)) & set(g.neighbours(b))
        for w in common:
            tri = tuple(sorted((a, b, w)))
            if best is None or tri < best:
                best = tri
    return best


def reduce_triangle(g: MultiGraph) -> ReductionRecord | None:
    """Contract a triangle into a single vertex; returns None when the graph
    is triangle-free.  The contraction may create parallel edges."""
    if not g.is_simple():
        raise GraphError("triangle reduction expects a simple graph")
    site = find_triangle(g)
    if site is None:
        return None
    v = list(site)
    spokes = []
    outside = []
    for i in range(3):
        others = {v[(i + 1) % 3], v[(i + 2) % 3]}
        spoke = next(
            e for e in g.incident_edges(v[i]) if g.other_end(e, v[i]) not in others
        )
        spokes.append(spoke)
        outside.append(g.other_end(spoke, v[i]))
    triangle_edges = tuple(
        g.edges_between(v[i], v[(i + 1) % 3])[0] for i in range(3)
    )

    relabel = {}
    for w in range(g.n):
        if w not in site:
            relabel[w] = len(relabel)
    x = g.n - 3
    new_edges: list[tuple[int, int]] = []
    shared: list[tuple[int, int]] = []
    for eid, (a, b) in enumerate(g.edges):
        if a in site or b in site:
            continue
        shared.append((len(new_edges), eid))
        new_edges.append((relabel[a], relabel[b]))
    x_edges = []
    for i in range(3):
        x_edges.append(len(new_edges))
        new_edges.append((x, relabel[outside[i]]))
    reduced = MultiGraph(g.n - 2, new_edges)
    _assert_still_valid(reduced, "triangle contraction")
    return ReductionRecord(
        kind=TRIANGLE,
        original=g,
        reduced=reduced,
        shared=tuple(shared),
        spokes=tuple(spokes),
        x_edges=tuple(x_edges),
        triangle_edges=triangle_edges,
    )


def lift_triangle(record: ReductionRecord, reduced_colouring: EdgeColouring) -> EdgeColouring:
    """Re-expand the contracted triangle: spoke i keeps the colour of the
    star edge at x it replaces, and triangle edge v_i v_{i+1} takes the
    colour of the opposite spoke (index i+2, modulo 3)."""
    if record.kind != TRIANGLE:
        raise GraphError("record is not a triangle reduction")
    check_proper(record.reduced, reduced_colouring)
    star = [reduced_colouring.colour_of[e] for e in record.x_edges]
    if len(set(star)) != 3:
        raise GraphError("star at the contracted vertex is not rainbow")
    cols = [0] * record.original.m
    for rid, oid in record.shared:
        cols[oid] = reduced_colouring.colour_of[rid]
    for i in range(3):
        cols[record.spokes[i]] = star[i]
        cols[record.triangle_edges[i]] = star[(i + 2) % 3]
    lifted = EdgeColouring(reduced_colouring.k, tuple(cols))
    check_proper(record.original, lifted)
    if medium_count(record.original, lifted) > medium_count(record.reduced, reduced_colouring):
        raise GraphError("lift increased the medium count")  # cannot happen
    return lifted


def lift(record: ReductionRecord, reduced_colouring: EdgeColouring) -> EdgeColouring:
    if record.kind == MULTI_EDGE:
        return lift_multi_edge(record, reduced_colouring)
    return lift_triangle(record, reduced_colouring)


def reduce_fully(g: MultiGraph) -> tuple[MultiGraph, list[ReductionRecord]]:
    """Exhaust multi-edge reductions before triangle contractions (each
    contraction can create new parallel pairs, so the loop interleaves)."""
    records: list[ReductionRecord] = []
    cur = g
    while cur.n > 2:
        rec = None
        if not cur.is_simple():
            rec = reduce_multi_edge(cur)
        if rec is None and cur.is_simple():
            rec = reduce_triangle(cur)
        if rec is None:
            break
        records.append(rec)
        cur = rec.reduced
    return cur, records
