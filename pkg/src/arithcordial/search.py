"""Exhaustive search over bijections V(G) -> S, used as the reference oracle.

Vertices are assigned in order 0..n-1 and candidate labels in ascending
order, so the first hit is the lexicographically smallest cordial labeling.
An edge is decided once both endpoints are labeled; a branch is cut when
|e0 - e1| already exceeds (undecided edges) + 1, which no completion can fix.
With pruning on, subtrees are also memoized on (next vertex, used labels,
labels on the frontier, e0, e1), which fully determines what lies below.
"""

from dataclasses import dataclass

from .errors import LimitExceeded, SizeMismatch
from .labeling import induced_edge_label


@dataclass(frozen=True)
class SearchOutcome:
    found: tuple = None
    count: int = None
    nodes_explored: int = 0
    exhausted: bool = False


def _prepare(graph, struct, limit):
    n = graph.order
    if n > limit:
        raise LimitExceeded(f"order {n} exceeds the search limit {limit}")
    labels = tuple(sorted(struct.label_set)) if struct.label_set is not None else tuple(range(1, n + 1))
    if len(labels) != n:
        raise SizeMismatch(f"|S| = {len(labels)} but the graph has order {n}")
    table = [[induced_edge_label(struct, x, y)[0] for y in labels] for x in labels]
    back = [[] for _ in range(n)]
    for u, v in graph.edges:
        back[max(u, v)].append(min(u, v))
    return labels, table, back


def _walk(graph, struct, limit, prune, stop_at_first):
    labels, table, back = _prepare(graph, struct, limit)
    n, total = graph.order, graph.size
    assign = [None] * n
    stats = {"nodes": 0, "found": None}
    # assigned vertices that still have an edge to an unassigned one
    adj = graph.adjacency()
    frontier = [tuple(u for u in range(v) if any(w >= v for w in adj[u])) for v in range(n + 1)]
    memo = {}

    def rec(v, used, e0, e1, decided):
        """Number of cordial completions below this node (at most 1 when stopping early)."""
        stats["nodes"] += 1
        if prune and abs(e0 - e1) > total - decided + 1:
            return 0
        if v == n:
            if abs(e0 - e1) > 1:
                return 0
            if stats["found"] is None:
                stats["found"] = tuple(labels[i] for i in assign)
            return 1
        if prune:
            # the subtree depends only on this key, so repeated states are answered from memo
            key = (v, used, tuple(assign[u] for u in frontier[v]), e0, e1)
            if key in memo:
                return memo[key]
        hits = 0
        for i in range(len(labels)):
            if used >> i & 1:
                continue
            ones = sum(table[i][assign[u]] for u in back[v])
            assign[v] = i
            hits += rec(v + 1, used | 1 << i, e0 + len(back[v]) - ones, e1 + ones, decided + len(back[v]))
            if hits and stop_at_first:
                break
        assign[v] = None
        if prune:
            memo[key] = hits
        return hits

    hits = rec(0, 0, 0, 0, 0)
    return stats, hits


def find_cordial_labeling(graph, struct, limit=12, prune=True):
    """Lexicographically smallest cordial labeling, or ``found=None`` when none exists."""
    stats, hits = _walk(graph, struct, limit, prune, stop_at_first=True)
    return SearchOutcome(
        found=stats["found"], nodes_explored=stats["nodes"], exhausted=not hits
    )


def count_cordial_labelings(graph, struct, limit=9, prune=True):
    """Number of cordial bijections, by full enumeration."""
    stats, hits = _walk(graph, struct, limit, prune, stop_at_first=False)
    return SearchOutcome(
        found=stats["found"],
        count=hits,
        nodes_explored=stats["nodes"],
        exhausted=True,
    )
