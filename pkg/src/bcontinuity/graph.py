"""Simple undirected graphs and the distance/degree metrics built on them."""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable

from .errors import PreconditionError

#: Girth of a graph without cycles. Compares greater than every finite girth.
ACYCLIC = math.inf


class Graph:
    """Immutable simple graph on the vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    edges : iterable of pairs
        Unordered vertex pairs. Duplicates (in either orientation) collapse;
        self-loops and out-of-range endpoints raise ``PreconditionError``.
    """

    __slots__ = ("_n", "_edges", "_adj", "_hash")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise PreconditionError(f"vertex count must be non-negative, got {n}")
        normalized = set()
        adj = [set() for _ in range(n)]
        for u, v in edges:
            u, v = int(u), int(v)
            if u == v:
                raise PreconditionError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"edge ({u}, {v}) out of range for n={n}")
            if u > v:
                u, v = v, u
            normalized.add((u, v))
            adj[u].add(v)
            adj[v].add(u)
        self._n = n
        self._edges = frozenset(normalized)
        self._adj = tuple(frozenset(a) for a in adj)
        self._hash = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def edges(self) -> frozenset[tuple[int, int]]:
        """Edges as ``(u, v)`` pairs with ``u < v``."""
        return self._edges

    @property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        return self._adj

    def vertices(self) -> range:
        return range(self._n)

    def neighbors(self, u: int) -> frozenset[int]:
        return self._adj[u]

    def closed_neighborhood(self, u: int) -> frozenset[int]:
        return self._adj[u] | {u}

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def degrees(self) -> list[int]:
        return [len(a) for a in self._adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self._edges)

    def __len__(self):
        return self._n

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self._n == other._n and self._edges == other._edges

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._edges))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self._n}, m={len(self._edges)})"


@dataclass(frozen=True)
class LayerDecomposition:
    """BFS layers around ``source``; ``layers[i]`` holds the vertices at distance i."""

    source: int
    layers: tuple[frozenset[int], ...]
    unreachable: frozenset[int]

    def distance(self, v: int) -> float:
        for i, layer in enumerate(self.layers):
            if v in layer:
                return i
        return math.inf

    def within(self, radius: int) -> frozenset[int]:
        """Vertices at distance 1..radius (the source itself excluded)."""
        out = set()
        for layer in self.layers[1 : radius + 1]:
            out |= layer
        return frozenset(out)

    def layer(self, i: int) -> frozenset[int]:
        return self.layers[i] if i < len(self.layers) else frozenset()


def bfs_distances(g: Graph, source: int) -> list[float]:
    dist = [math.inf] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if dist[w] == math.inf:
                dist[w] = dist[v] + 1
                queue.append(w)
    return dist


def layers(g: Graph, u: int) -> LayerDecomposition:
    if not 0 <= u < g.n:
        raise PreconditionError(f"vertex {u} out of range for n={g.n}")
    dist = bfs_distances(g, u)
    depth = max((d for d in dist if d != math.inf), default=0)
    buckets = [set() for _ in range(int(depth) + 1)]
    unreachable = set()
    for v, d in enumerate(dist):
        if d == math.inf:
            unreachable.add(v)
        else:
            buckets[int(d)].add(v)
    return LayerDecomposition(u, tuple(frozenset(b) for b in buckets), frozenset(unreachable))


def girth(g: Graph) -> float:
    """Length of a shortest cycle, or ``ACYCLIC``.

    One BFS per root; a non-tree edge ``vw`` closes a cycle of length at
    most ``dist[v] + dist[w] + 1`` and the minimum over all roots is exact.
    """
    best = ACYCLIC
    for root in g.vertices():
        dist = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            if 2 * dist[v] + 1 >= best:
                break
            for w in g.neighbors(v):
                if w not in dist:
                    dist[w] = dist[v] + 1
                    parent[w] = v
                    queue.append(w)
                elif parent[v] != w:
                    best = min(best, dist[v] + dist[w] + 1)
    return best


def has_cycle_of_length(g: Graph, length: int) -> bool:
    """Whether ``g`` contains a cycle with exactly ``length`` vertices.

    Depth-bounded DFS over simple paths that start at their smallest vertex.
    """
    if length < 3:
        return False
    adj = g.adjacency

    def extend(start, v, depth, on_path):
        for w in adj[v]:
            if w == start and depth == length:
                return True
            if w <= start or w in on_path or depth >= length:
                continue
            on_path.add(w)
            if extend(start, w, depth + 1, on_path):
                return True
            on_path.discard(w)
        return False

    return any(extend(s, s, 1, {s}) for s in g.vertices())


def m_degree(g: Graph) -> int:
    """Largest k such that at least k vertices have degree at least k - 1."""
    if g.n < 1:
        raise PreconditionError("m(G) is defined for graphs with at least one vertex")
    degs = sorted(g.degrees(), reverse=True)
    m = 0
    for k in range(1, g.n + 1):
        if degs[k - 1] >= k - 1:
            m = k
        else:
            break
    return m


def dense_vertices(g: Graph, k: int) -> frozenset[int]:
    """Vertices of degree at least ``k - 1``."""
    if k < 1:
        raise PreconditionError(f"k must be at least 1, got {k}")
    return frozenset(v for v in g.vertices() if g.degree(v) >= k - 1)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return True
    return all(d != math.inf for d in bfs_distances(g, 0))


def is_regular(g: Graph) -> bool:
    return len(set(g.degrees())) <= 1


def is_bipartite(g: Graph) -> bool:
    side = [-1] * g.n
    for s in g.vertices():
        if side[s] != -1:
            continue
        side[s] = 0
        queue = deque([s])
        while queue:
            v = queue.popleft()
            for w in g.neighbors(v):
                if side[w] == -1:
                    side[w] = 1 - side[v]
                    queue.append(w)
                elif side[w] == side[v]:
                    return False
    return True


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, list[int]]:
    """Induced subgraph relabelled to ``0..len-1`` plus the old labels in order."""
    order = sorted(set(vertices))
    index = {v: i for i, v in enumerate(order)}
    edges = [(index[u], index[v]) for u, v in g.edges if u in index and v in index]
    return Graph(len(order), edges), order
