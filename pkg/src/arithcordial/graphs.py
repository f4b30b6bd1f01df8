"""Finite simple undirected graphs, the standard families, and join/corona/tensor.

Vertices are always ``0..order-1``.  Every constructor attaches a *role* tuple
to each vertex so labelers can find "the central vertex" or "position i of
cycle j" without re-deriving the numbering:

=====================  ===========================================
constructor            role of each vertex
=====================  ===========================================
path, cycle, complete  ``("v", i)``
empty                  ``("v", i)``
star                   ``("center",)`` for 0, ``("leaf", i)`` else
ladder                 ``("rail", j, i)``, rail j in {0, 1}
kayak_paddle           ``("cycle1", i)``, ``("path", i)``, ``("cycle2", i)``
snake                  ``("cycle", j, i)``
join                   ``("left", role)`` / ``("right", role)``
corona                 ``("base", role)`` / ``("copy", i, role)``
tensor                 ``("pair", g, h)``
=====================  ===========================================

Positions and copy indices inside roles are 0-based.
"""

from collections import deque
from dataclasses import dataclass, field
import json

from .errors import CordialError, NotBipartite


@dataclass(frozen=True)
class Graph:
    order: int
    edges: tuple
    roles: tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if self.order < 0:
            raise CordialError(f"negative order {self.order}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise CordialError(f"self-loop at {u}")
            if not (0 <= u < self.order and 0 <= v < self.order):
                raise CordialError(f"edge ({u}, {v}) out of range for order {self.order}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise CordialError(f"duplicate edge {key}")
            seen.add(key)
        object.__setattr__(self, "edges", tuple(sorted(seen)))
        roles = self.roles
        if roles is None:
            roles = tuple(("v", i) for i in range(self.order))
        elif len(roles) != self.order:
            raise CordialError("one role per vertex required")
        object.__setattr__(self, "roles", tuple(roles))

    @classmethod
    def from_edges(cls, order, edges, roles=None):
        return cls(order, tuple((int(u), int(v)) for u, v in edges), roles)

    @property
    def size(self):
        return len(self.edges)

    def adjacency(self):
        adj = [[] for _ in range(self.order)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def has_edge(self, u, v):
        return (min(u, v), max(u, v)) in set(self.edges)

    def vertices_with_role(self, *prefix):
        """Vertices whose role tuple starts with ``prefix``."""
        k = len(prefix)
        return [v for v, r in enumerate(self.roles) if tuple(r[:k]) == prefix]

    def connected(self):
        if self.order <= 1:
            return True
        adj = self.adjacency()
        seen = {0}
        stack = [0]
        while stack:
            for w in adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == self.order

    def bridges(self):
        """Edges whose removal disconnects their component."""
        out = []
        for e in self.edges:
            rest = Graph(self.order, tuple(x for x in self.edges if x != e))
            if not _reachable(rest, e[0], e[1]):
                out.append(e)
        return out

    def with_edges(self, extra):
        """Copy with extra edges added; roles are kept."""
        return Graph(self.order, self.edges + tuple(extra), self.roles)

    def to_json(self):
        return {"order": self.order, "edges": [list(e) for e in self.edges]}

    def to_edge_list(self):
        lines = [str(self.order)] + [f"{u} {v}" for u, v in self.edges]
        return "\n".join(lines) + "\n"


def _reachable(g, src, dst):
    adj = g.adjacency()
    seen = {src}
    stack = [src]
    while stack:
        x = stack.pop()
        if x == dst:
            return True
        for w in adj[x]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def from_json(data):
    if isinstance(data, str):
        data = json.loads(data)
    data = data.get("graph", data)
    return Graph.from_edges(int(data["order"]), data["edges"])


def from_edge_list(text):
    tokens = [line.split() for line in text.splitlines() if line.strip()]
    if not tokens or len(tokens[0]) != 1:
        raise CordialError("edge list must start with a line holding the order")
    order = int(tokens[0][0])
    edges = []
    for t in tokens[1:]:
        if len(t) != 2:
            raise CordialError(f"bad edge line: {' '.join(t)!r}")
        edges.append((int(t[0]), int(t[1])))
    return Graph.from_edges(order, edges)


def load(path):
    """Read a graph from a ``.json`` file or an edge-list text file."""
    with open(path) as fh:
        text = fh.read()
    if str(path).endswith(".json"):
        return from_json(text)
    return from_edge_list(text)


def _need(cond, msg):
    if not cond:
        raise CordialError(msg)


def path(n):
    _need(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def cycle(n):
    _need(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def star(n):
    _need(n >= 2, f"star needs n >= 2, got {n}")
    roles = (("center",),) + tuple(("leaf", i) for i in range(1, n))
    return Graph(n, tuple((0, i) for i in range(1, n)), roles)


def complete(n):
    _need(n >= 1, f"complete needs n >= 1, got {n}")
    return Graph(n, tuple((i, j) for i in range(n) for j in range(i + 1, n)))


def empty(n):
    _need(n >= 1, f"empty needs n >= 1, got {n}")
    return Graph(n, ())


def ladder(n):
    """Two rails of length n; vertex ``j*n + i`` is position i on rail j."""
    _need(n >= 2, f"ladder needs n >= 2, got {n}")
    edges = []
    for j in (0, 1):
        edges += [(j * n + i, j * n + i + 1) for i in range(n - 1)]
    edges += [(i, n + i) for i in range(n)]
    roles = tuple(("rail", j, i) for j in (0, 1) for i in range(n))
    return Graph(2 * n, tuple(edges), roles)


def kayak_paddle(n, m, k):
    """Cycles C_n and C_k joined by a path with m internal vertices.

    The path leaves C_n at its last vertex (n-1) and enters C_k at its first.
    """
    _need(n >= 3 and k >= 3, f"kayak paddle cycles need >= 3 vertices, got {n}, {k}")
    _need(m >= 0, f"kayak paddle path length must be >= 0, got {m}")
    edges = [(i, (i + 1) % n) for i in range(n)]
    off = n + m
    edges += [(off + i, off + (i + 1) % k) for i in range(k)]
    chain = [n - 1] + list(range(n, n + m)) + [off]
    edges += list(zip(chain, chain[1:]))
    roles = (
        tuple(("cycle1", i) for i in range(n))
        + tuple(("path", i) for i in range(m))
        + tuple(("cycle2", i) for i in range(k))
    )
    return Graph(n + m + k, tuple(edges), roles)


def snake(n, m):
    """Chain of n copies of C_m; last vertex of copy j meets first vertex of copy j+1."""
    _need(n >= 1, f"snake needs n >= 1 cycles, got {n}")
    _need(m >= 3, f"snake cycles need m >= 3, got {m}")
    edges = []
    for j in range(n):
        base = j * m
        edges += [(base + i, base + (i + 1) % m) for i in range(m)]
        if j + 1 < n:
            edges.append((base + m - 1, base + m))
    roles = tuple(("cycle", j, i) for j in range(n) for i in range(m))
    return Graph(n * m, tuple(edges), roles)


def _nonempty(*graphs):
    for g in graphs:
        _need(g.order >= 1, "graph operands must have at least one vertex")


def join(g, h):
    """G + H: disjoint union plus every edge between the two sides (H shifted by |G|)."""
    _nonempty(g, h)
    off = g.order
    edges = list(g.edges) + [(u + off, v + off) for u, v in h.edges]
    edges += [(a, off + b) for a in range(g.order) for b in range(h.order)]
    roles = tuple(("left", r) for r in g.roles) + tuple(("right", r) for r in h.roles)
    return Graph(g.order + h.order, tuple(edges), roles)


def corona(g, h):
    """G o H: G's vertices first, then copy i of H at ``|G| + i*|H|``, hung off vertex i."""
    _nonempty(g, h)
    n, k = g.order, h.order
    edges = list(g.edges)
    for i in range(n):
        off = n + i * k
        edges += [(u + off, v + off) for u, v in h.edges]
        edges += [(i, off + b) for b in range(k)]
    roles = tuple(("base", r) for r in g.roles) + tuple(
        ("copy", i, r) for i in range(n) for r in h.roles
    )
    return Graph(n * (1 + k), tuple(edges), roles)


def tensor(g, h):
    """G x H with (a, b) at index ``a*|H| + b``."""
    _nonempty(g, h)
    k = h.order
    edges = []
    for a1, a2 in g.edges:
        for b1, b2 in h.edges:
            edges.append((a1 * k + b1, a2 * k + b2))
            edges.append((a1 * k + b2, a2 * k + b1))
    roles = tuple(("pair", a, b) for a in range(g.order) for b in range(k))
    return Graph(g.order * k, tuple(edges), roles)


def bipartite_partition(g):
    """BFS 2-colouring from vertex 0; the first part holds vertex 0.

    Raises NotBipartite on an odd cycle and CordialError on a disconnected graph.
    """
    if g.order == 0:
        return [], []
    if not g.connected():
        raise CordialError("bipartite_partition needs a connected graph")
    adj = g.adjacency()
    colour = [None] * g.order
    colour[0] = 0
    queue = deque([0])
    while queue:
        x = queue.popleft()
        for w in adj[x]:
            if colour[w] is None:
                colour[w] = 1 - colour[x]
                queue.append(w)
            elif colour[w] == colour[x]:
                raise NotBipartite(f"odd cycle through edge ({x}, {w})")
    return (
        [v for v in range(g.order) if colour[v] == 0],
        [v for v in range(g.order) if colour[v] == 1],
    )
