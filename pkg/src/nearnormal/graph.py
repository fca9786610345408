"""Loopless undirected multigraph with stable edge ids.

Every other module consumes this representation.  Edges carry dense integer
ids assigned in input order, so parallel edges stay distinguishable and all
downstream maps are keyed by edge id, never by endpoint pair (graph rewrites
create and destroy parallel edges).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass


class GraphError(ValueError):
    """Structurally invalid graph, edge reference, or query."""


class MultiGraph:
    """Loopless multigraph on vertices ``0..n-1``.

    ``edges[i]`` holds the endpoint pair of edge ``i``, normalised so the
    smaller vertex comes first.  Instances are immutable after construction
    and safe to share; all queries are read-only.
    """

    __slots__ = ("n", "edges", "_incident")

    def __init__(self, vertex_count: int, edge_list) -> None:
        if vertex_count < 0:
            raise GraphError("vertex count must be non-negative")
        self.n = vertex_count
        edges: list[tuple[int, int]] = []
        incident: list[list[int]] = [[] for _ in range(vertex_count)]
        for eid, (u, v) in enumerate(edge_list):
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise GraphError(f"edge {eid}: endpoint out of range: ({u}, {v})")
            if u == v:
                raise GraphError(f"edge {eid}: loop at vertex {u}")
            if u > v:
                u, v = v, u
            edges.append((u, v))
            incident[u].append(eid)
            incident[v].append(eid)
        self.edges = tuple(edges)
        self._incident = tuple(tuple(es) for es in incident)

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        self._check_edge(e)
        return self.edges[e]

    def other_end(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        if v == a:
            return b
        if v == b:
            return a
        raise GraphError(f"vertex {v} is not an endpoint of edge {e}")

    def incident_edges(self, v: int) -> tuple[int, ...]:
        self._check_vertex(v)
        return self._incident[v]

    def degree(self, v: int) -> int:
        return len(self.incident_edges(v))

    def neighbours(self, v: int) -> list[int]:
        """Neighbouring vertices, with multiplicity for parallel edges."""
        return [self.other_end(e, v) for e in self.incident_edges(v)]

    def edges_between(self, u: int, v: int) -> list[int]:
        self._check_vertex(v)
        return [e for e in self.incident_edges(u) if self.other_end(e, u) == v]

    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(es) == 3 for es in self._incident)

    def is_simple(self) -> bool:
        return len(set(self.edges)) == len(self.edges)

    def _check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise GraphError(f"vertex {v} out of range")

    def _check_edge(self, e: int) -> None:
        if not (0 <= e < len(self.edges)):
            raise GraphError(f"edge id {e} out of range")

    def __eq__(self, other) -> bool:
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"MultiGraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class EdgeNeighbourhood:
    """The edges sharing at least one endpoint with ``edge_id``.

    Four elements in a simple cubic graph; two or three when parallel edges
    eat up incidences.
    """

    edge_id: int
    adjacent_ids: frozenset[int]


@dataclass(frozen=True)
class Diagnosis:
    """Outcome of :func:`validate_input`; ``reason`` names the first
    violated property when ``ok`` is false."""

    ok: bool
    reason: str | None = None
    detail: str | None = None


def build_graph(vertex_count: int, edge_list) -> MultiGraph:
    """Build a loopless multigraph; edge ids follow input order."""
    return MultiGraph(vertex_count, edge_list)


def adjacent_edges(g: MultiGraph, e: int) -> EdgeNeighbourhood:
    u, v = g.endpoints(e)
    ids = set(g.incident_edges(u)) | set(g.incident_edges(v))
    ids.discard(e)
    return EdgeNeighbourhood(e, frozenset(ids))


def connected_components(g: MultiGraph) -> list[list[int]]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for e in g.incident_edges(v):
                w = g.other_end(e, v)
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        comps.append(comp)
    return comps


def is_connected(g: MultiGraph) -> bool:
    # The empty graph counts as connected; validation rejects it as non-cubic.
    return g.n == 0 or len(connected_components(g)) == 1


def find_bridges(g: MultiGraph) -> set[int]:
    """Cut edges of a connected multigraph (iterative lowpoint search).

    Parallel edges are never bridges: the twin edge acts as a back edge
    because the traversal skips only the tree edge *id*, not the endpoint.
    """
    if not is_connected(g):
        raise GraphError("bridge search requires a connected graph")
    disc = [-1] * g.n
    low = [0] * g.n
    bridges: set[int] = set()
    counter = 0
    if g.n == 0:
        return bridges
    # stack entries: (vertex, incoming edge id, iterator over incident edges)
    stack = [(0, -1, iter(g.incident_edges(0)))]
    disc[0] = low[0] = counter
    counter += 1
    while stack:
        v, in_edge, it = stack[-1]
        advanced = False
        for e in it:
            if e == in_edge:
                continue
            w = g.other_end(e, v)
            if disc[w] == -1:
                disc[w] = low[w] = counter
                counter += 1
                stack.append((w, e, iter(g.incident_edges(w))))
                advanced = True
                break
            low[v] = min(low[v], disc[w])
        if advanced:
            continue
        stack.pop()
        if stack:
            parent = stack[-1][0]
            low[parent] = min(low[parent], low[v])
            if low[v] > disc[parent]:
                bridges.add(in_edge)
    return bridges


def validate_input(g: MultiGraph) -> Diagnosis:
    """Accept exactly the connected bridgeless cubic loopless multigraphs."""
    if not is_connected(g):
        return Diagnosis(False, "connected", "graph is disconnected")
    if g.n == 0:
        return Diagnosis(False, "cubic", "graph has no vertices")
    for v in range(g.n):
        if g.degree(v) != 3:
            return Diagnosis(False, "cubic", f"vertex {v} has degree {g.degree(v)}")
    # loops are unrepresentable (MultiGraph rejects them at build time)
    bridges = find_bridges(g)
    if bridges:
        e = min(bridges)
        return Diagnosis(False, "bridge", f"edge {e} = {g.endpoints(e)} is a bridge")
    return Diagnosis(True)


def girth(g: MultiGraph) -> int:
    """Length of a shortest cycle; parallel pairs count as 2-cycles."""
    if not g.is_simple():
        return 2
    best = g.n + 1
    for root in range(g.n):
        dist = [-1] * g.n
        via = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for e in g.incident_edges(v):
                w = g.other_end(e, v)
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    via[w] = e
                    queue.append(w)
                elif e != via[v]:
                    best = min(best, dist[v] + dist[w] + 1)
    return best if best <= g.n else 0


def _distance_profile(g: MultiGraph) -> tuple[tuple[int, ...], ...]:
    """Sorted per-vertex multisets of BFS distance counts (iso invariant)."""
    profiles = []
    for root in range(g.n):
        dist = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        counts: dict[int, int] = {}
        while queue:
            v = queue.popleft()
            counts[dist[v]] = counts.get(dist[v], 0) + 1
            for e in g.incident_edges(v):
                w = g.other_end(e, v)
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        profiles.append(tuple(counts.get(d, 0) for d in range(g.n)))
    return tuple(sorted(profiles))


def isomorphism_invariant(g: MultiGraph):
    """Cheap invariant used to bucket graphs before exact isomorphism."""
    degs = tuple(sorted(g.degree(v) for v in range(g.n)))
    return (g.n, g.m, degs, girth(g), _distance_profile(g))


def graphs_isomorphic(g1: MultiGraph, g2: MultiGraph) -> bool:
    """Exact isomorphism test for small simple graphs (backtracking)."""
    if not (g1.is_simple() and g2.is_simple()):
        raise GraphError("isomorphism test supports simple graphs only")
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if isomorphism_invariant(g1) != isomorphism_invariant(g2):
        return False
    n = g1.n
    if n == 0:
        return True
    adj1 = [set(g1.neighbours(v)) for v in range(n)]
    adj2 = [set(g2.neighbours(v)) for v in range(n)]
    prof1 = [None] * n
    prof2 = [None] * n
    for g, adj, prof in ((g1, adj1, prof1), (g2, adj2, prof2)):
        profile = _per_vertex_profile(g)
        for v in range(n):
            prof[v] = profile[v]
    # map vertices of g1 in a connectivity-friendly order
    order = _mapping_order(adj1)
    mapping = [-1] * n
    used = [False] * n

    def extend(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(n):
            if used[w] or prof1[v] != prof2[w] or len(adj1[v]) != len(adj2[w]):
                continue
            ok = True
            for u in range(n):
                mu = mapping[u]
                if mu == -1:
                    continue
                if (u in adj1[v]) != (mu in adj2[w]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used[w] = True
                if extend(i + 1):
                    return True
                mapping[v] = -1
                used[w] = False
        return False

    return extend(0)


def _per_vertex_profile(g: MultiGraph) -> list:
    out = []
    for root in range(g.n):
        dist = [-1] * g.n
        dist[root] = 0
        queue = deque([root])
        counts: dict[int, int] = {}
        while queue:
            v = queue.popleft()
            counts[dist[v]] = counts.get(dist[v], 0) + 1
            for e in g.incident_edges(v):
                w = g.other_end(e, v)
                if dist[w] == -1:
                    dist[w] = dist[v] + 1
                    queue.append(w)
        out.append(tuple(sorted(counts.items())))
    return out


def _mapping_order(adj: list[set[int]]) -> list[int]:
    n = len(adj)
    seen = [False] * n
    order: list[int] = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        queue = deque([start])
        while queue:
            v = queue.popleft()
            order.append(v)
            for w in sorted(adj[v]):
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    return order
