"""Small-graph corpus: named graphs, an embedded generator for all connected
cubic simple graphs of a given order (backtracking with isomorphism
rejection), and loaders for the packaged graph6 corpus files.

The generator is exhaustive and practical up to n = 12 on a laptop-class
machine; the packaged files extend the corpus to n = 14 so the test suite
never needs the network.
"""

from __future__ import annotations

from importlib import resources
from itertools import combinations

from .graph import (
    GraphError,
    MultiGraph,
    build_graph,
    graphs_isomorphic,
    isomorphism_invariant,
    validate_input,
)


def petersen_graph() -> MultiGraph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i--i+5."""
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    return build_graph(10, outer + inner + spokes)


def complete_graph_k4() -> MultiGraph:
    return build_graph(4, list(combinations(range(4), 2)))


def k33() -> MultiGraph:
    return build_graph(6, [(u, v) for u in range(3) for v in range(3, 6)])


def prism(k: int) -> MultiGraph:
    """Two k-cycles joined by a perfect matching of spokes."""
    if k < 3:
        raise GraphError("prism needs k >= 3")
    top = [(i, (i + 1) % k) for i in range(k)]
    bottom = [(k + i, k + (i + 1) % k) for i in range(k)]
    spokes = [(i, k + i) for i in range(k)]
    return build_graph(2 * k, top + bottom + spokes)


def triple_edge() -> MultiGraph:
    return build_graph(2, [(0, 1)] * 3)


def moebius_ladder(k: int) -> MultiGraph:
    """2k-cycle plus the k long chords (cubic for k >= 2)."""
    n = 2 * k
    rim = [(i, (i + 1) % n) for i in range(n)]
    chords = [(i, i + k) for i in range(k)]
    return build_graph(n, rim + chords)


def _labelled_cubic_leaves(n: int):
    """Yield edge lists of connected cubic graphs on n labelled vertices.

    Labels follow breadth-first discovery order, which enforces
    connectivity.  Pairs of vertices introduced together are interchangeable
    until an edge touches exactly one of them; branches that favour the
    larger label at that first asymmetry are rejected (the swapped labelling
    is produced elsewhere).  Isomorphic duplicates still remain and must be
    filtered by the caller.
    """
    adj: list[set[int]] = [set() for _ in range(n)]
    deg = [0] * n
    edges: list[tuple[int, int]] = []
    tied: dict[int, bool] = {}

    def extend(v: int, frontier_end: int):
        if v == n:
            yield list(edges)
            return
        if v >= frontier_end:
            return
        need = 3 - deg[v]
        cands = [
            u for u in range(v + 1, frontier_end)
            if deg[u] < 3 and u not in adj[v]
        ]
        max_new = min(need, n - frontier_end)
        for k in range(max_new, -1, -1):
            b = need - k
            if b > len(cands):
                continue
            for back in combinations(cands, b):
                bs = set(back)
                rejected = False
                resolved: list[int] = []
                for a, is_tied in tied.items():
                    if not is_tied:
                        continue
                    touched_a = (v == a) or (a in bs)
                    touched_b = (a + 1) in bs
                    if touched_b and not touched_a:
                        rejected = True
                        break
                    if touched_a != touched_b:
                        resolved.append(a)
                if rejected:
                    continue
                for a in resolved:
                    tied[a] = False
                added = []
                for u in back:
                    edges.append((v, u))
                    adj[v].add(u)
                    adj[u].add(v)
                    deg[v] += 1
                    deg[u] += 1
                    added.append(u)
                new_pairs = []
                for j in range(k):
                    w = frontier_end + j
                    edges.append((v, w))
                    adj[v].add(w)
                    adj[w].add(v)
                    deg[v] += 1
                    deg[w] += 1
                    added.append(w)
                    if j + 1 < k:
                        new_pairs.append(w)
                        tied[w] = True
                fe2 = frontier_end + k
                rem = sum(3 - deg[u] for u in range(v + 1, fe2)) + 3 * (n - fe2)
                feasible = rem % 2 == 0
                if feasible and fe2 < n:
                    feasible = any(deg[u] < 3 for u in range(v + 1, fe2))
                if feasible:
                    yield from extend(v + 1, fe2)
                for w in new_pairs:
                    del tied[w]
                for u in reversed(added):
                    edges.pop()
                    adj[v].discard(u)
                    adj[u].discard(v)
                    deg[v] -= 1
                    deg[u] -= 1
                for a in resolved:
                    tied[a] = True

    yield from extend(0, 1)


def generate_connected_cubic(n: int) -> list[MultiGraph]:
    """All connected cubic simple graphs on n vertices, one per isomorphism
    class, in a deterministic order."""
    if n < 4 or n % 2:
        return []
    buckets: dict[object, list[MultiGraph]] = {}
    out: list[MultiGraph] = []
    for edge_list in _labelled_cubic_leaves(n):
        g = MultiGraph(n, edge_list)
        inv = isomorphism_invariant(g)
        bucket = buckets.setdefault(inv, [])
        if any(graphs_isomorphic(g, h) for h in bucket):
            continue
        bucket.append(g)
        out.append(g)
    return out


# Published counts of connected cubic simple graphs, used to sanity-check
# both the generator and the packaged corpus files.
CONNECTED_CUBIC_COUNTS = {4: 1, 6: 2, 8: 5, 10: 19, 12: 85, 14: 509}

CORPUS_ORDERS = (4, 6, 8, 10, 12, 14)


def load_cubic_corpus(n: int, bridgeless_only: bool = True) -> list[MultiGraph]:
    """Load the packaged corpus of connected cubic graphs on n vertices."""
    from .graphio import parse_graph6

    if n not in CORPUS_ORDERS:
        raise GraphError(f"no packaged corpus for n={n}")
    path = resources.files("nearnormal").joinpath(f"data/cubic{n:02d}.g6")
    graphs = [parse_graph6(line) for line in path.read_text().splitlines() if line.strip()]
    if bridgeless_only:
        graphs = [g for g in graphs if validate_input(g).ok]
    return graphs
