"""Named graph families and seeded random generators.

``generate("name:p1:p2")`` is the string front end used by the CLI.
"""

from __future__ import annotations

import random
from itertools import combinations

from .errors import PreconditionError
from .graph import Graph, bfs_distances, girth

DEFAULT_GIRTH_ATTEMPTS = 10_000
DEFAULT_EDGE_PROBABILITIES = (0.05, 0.1, 0.2, 0.35, 0.5)


def _require(cond, msg):
    if not cond:
        raise PreconditionError(msg)


def hypercube(d: int) -> Graph:
    _require(d >= 0, f"hypercube dimension must be >= 0, got {d}")
    n = 1 << d
    return Graph(n, [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if v < v ^ (1 << b)])


def crown(n: int) -> Graph:
    """K_{n,n} minus a perfect matching; sides ``0..n-1`` and ``n..2n-1``."""
    _require(n >= 2, f"crown graph needs n >= 2, got {n}")
    return Graph(2 * n, [(i, n + j) for i in range(n) for j in range(n) if i != j])


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle needs n >= 3, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    _require(n >= 1, f"path needs n >= 1, got {n}")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete graph needs n >= 1, got {n}")
    return Graph(n, combinations(range(n), 2))


def empty(n: int) -> Graph:
    _require(n >= 1, f"empty graph needs n >= 1, got {n}")
    return Graph(n)


def star(leaves: int) -> Graph:
    _require(leaves >= 1, f"star needs at least one leaf, got {leaves}")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def random_tree(n: int, seed=None) -> Graph:
    """Uniform labelled tree on ``n`` vertices via a random Prüfer sequence."""
    _require(n >= 1, f"tree needs n >= 1, got {n}")
    if n <= 2:
        return path(n)
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph(n, edges)


def random_girth(
    n: int,
    g_min: int,
    seed=None,
    attempts: int = DEFAULT_GIRTH_ATTEMPTS,
    probabilities=DEFAULT_EDGE_PROBABILITIES,
) -> Graph | None:
    """Connected graph with at least one cycle and girth at least ``g_min``.

    Each attempt grows a random spanning tree, then offers every non-edge
    (in random order) with probability taken cyclically from
    ``probabilities``; an offered edge is kept only if its endpoints are at
    distance at least ``g_min - 1``. Attempts that end acyclic are rejected.
    Returns ``None`` once ``attempts`` are exhausted.
    """
    _require(n >= 1, f"n must be >= 1, got {n}")
    _require(g_min >= 3, f"g_min must be >= 3, got {g_min}")
    _require(attempts >= 1, "attempts must be positive")
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    for attempt in range(attempts):
        p = probabilities[attempt % len(probabilities)]
        tree = random_tree(n, rng.randrange(2**32))
        edges = set(tree.edges)
        current = tree
        rng.shuffle(pairs)
        for u, v in pairs:
            if (u, v) in edges or rng.random() >= p:
                continue
            if bfs_distances(current, u)[v] >= g_min - 1:
                edges.add((u, v))
                current = Graph(n, edges)
        if len(edges) >= n:
            assert girth(current) >= g_min
            return current
    return None


_FAMILIES = {
    "hypercube": (hypercube, 1),
    "crown": (crown, 1),
    "cycle": (cycle, 1),
    "path": (path, 1),
    "complete": (complete, 1),
    "empty": (empty, 1),
    "star": (star, 1),
    "petersen": (petersen, 0),
    "random_tree": (random_tree, 2),
    "random_girth": (random_girth, 3),
}


def family_names() -> list[str]:
    return sorted(_FAMILIES)


def generate(spec: str) -> Graph | None:
    """Build a graph from ``name:int:int...``, e.g. ``"crown:4"``.

    ``random_tree:n[:seed]`` and ``random_girth:n:g_min[:seed]`` take an
    optional trailing seed (default 0). ``random_girth`` may return ``None``.
    """
    name, *raw = spec.strip().split(":")
    if name not in _FAMILIES:
        raise PreconditionError(f"unknown graph family {name!r}; known: {', '.join(family_names())}")
    func, arity = _FAMILIES[name]
    try:
        params = [int(p) for p in raw]
    except ValueError:
        raise PreconditionError(f"non-integer parameter in {spec!r}") from None
    if name.startswith("random_") and len(params) == arity - 1:
        params.append(0)
    if len(params) != arity:
        raise PreconditionError(f"{name} takes {arity} integer parameter(s), got {len(params)}")
    return func(*params)
