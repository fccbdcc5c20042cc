"""Colorings and the structural predicates on them.

Colors are ``1..k``. A vertex is a b-vertex when the coloring is proper at it
and its closed neighborhood sees all ``k`` colors; a color is *realized* when
its class contains a b-vertex.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .errors import ImpossibleStateError, PreconditionError
from .graph import Graph
from .io import format_colors, parse_colors


@dataclass(frozen=True)
class Coloring:
    """Total assignment of colors ``1..k`` to the vertices of ``graph``.

    Every color in ``1..k`` must be used, so ``k`` is the number of distinct
    colors. Properness is not required here; ``validate`` reports it.
    """

    graph: Graph = field(repr=False)
    colors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(int(c) for c in self.colors))
        if len(self.colors) != self.graph.n:
            raise PreconditionError(f"coloring has {len(self.colors)} entries but the graph has {self.graph.n} vertices")
        used = set(self.colors)
        if used and used != set(range(1, len(used) + 1)):
            raise PreconditionError(f"colors must be exactly 1..k with no empty class, got {sorted(used)}")

    @property
    def k(self) -> int:
        return len(set(self.colors))

    def __getitem__(self, v: int) -> int:
        return self.colors[v]

    def class_of(self, i: int) -> frozenset[int]:
        return frozenset(v for v, c in enumerate(self.colors) if c == i)

    def colors_of(self, vertices) -> frozenset[int]:
        return frozenset(self.colors[v] for v in vertices)

    def recolored(self, changes: dict[int, int]) -> Coloring:
        colors = list(self.colors)
        for v, c in changes.items():
            colors[v] = c
        return Coloring(self.graph, colors)

    def to_text(self) -> str:
        return format_colors(self.colors)

    @classmethod
    def from_text(cls, graph: Graph, text: str) -> Coloring:
        return cls(graph, parse_colors(text))


@dataclass(frozen=True)
class BReport:
    b_vertices: frozenset[int]
    per_color_b: dict[int, frozenset[int]]
    realized: frozenset[int]
    is_b_coloring: bool
    is_proper: bool
    k: int


@dataclass(frozen=True)
class MutabilityReport:
    vertex: int
    safe_colors: frozenset[int]

    @property
    def is_mutable(self) -> bool:
        return bool(self.safe_colors)

    @property
    def lowest_safe(self) -> int | None:
        return min(self.safe_colors) if self.safe_colors else None


class WeakReport(NamedTuple):
    is_weak: bool
    # x -> {w: alternative b-vertex realizing color(w) outside N(R_i(u))}
    witnesses: dict[int, dict[int, int]]


def _bind(g: Graph, c: Coloring):
    if c.graph is not g and c.graph != g:
        raise PreconditionError("coloring is bound to a different graph")


def _is_b_vertex(g, colors, k, u):
    own = colors[u]
    seen = set()
    for w in g.neighbors(u):
        cw = colors[w]
        if cw == own:
            return False
        seen.add(cw)
    return len(seen) == k - 1


def b_vertices(g: Graph, c: Coloring) -> frozenset[int]:
    _bind(g, c)
    k = c.k
    return frozenset(u for u in g.vertices() if _is_b_vertex(g, c.colors, k, u))


def is_proper(g: Graph, c: Coloring) -> bool:
    _bind(g, c)
    return all(c.colors[u] != c.colors[v] for u, v in g.edges)


def validate(g: Graph, c: Coloring) -> BReport:
    _bind(g, c)
    k = c.k
    bset = b_vertices(g, c)
    per_color = {i: frozenset(v for v in bset if c.colors[v] == i) for i in range(1, k + 1)}
    realized = frozenset(i for i, b in per_color.items() if b)
    proper = is_proper(g, c)
    return BReport(
        b_vertices=bset,
        per_color_b=per_color,
        realized=realized,
        is_b_coloring=proper and len(realized) == k,
        is_proper=proper,
        k=k,
    )


def clean_color(g: Graph, c: Coloring, i: int) -> Coloring:
    """Remove the unrealized color ``i``.

    Each vertex of class ``i`` takes its lowest free color; colors above
    ``i`` then shift down by one.
    """
    _bind(g, c)
    k = c.k
    if not 1 <= i <= k:
        raise PreconditionError(f"color {i} not in 1..{k}")
    if k < 2:
        raise PreconditionError("cannot clean the only color")
    if not is_proper(g, c):
        raise PreconditionError("clean_color needs a proper coloring")
    if any(c.colors[v] == i for v in b_vertices(g, c)):
        raise PreconditionError(f"color {i} is realized and cannot be cleaned")
    colors = list(c.colors)
    for u in c.class_of(i):
        seen = c.colors_of(g.closed_neighborhood(u))
        free = [j for j in range(1, k + 1) if j not in seen]
        if not free:
            raise ImpossibleStateError(
                f"vertex {u} of unrealized color {i} sees every color",
                {"colors": c.to_text(), "vertex": u, "color": i},
            )
        colors[u] = free[0]
    return Coloring(g, [x - 1 if x > i else x for x in colors])


def unique_color_witnesses(g: Graph, c: Coloring, x: int) -> frozenset[int]:
    """b-vertices whose only neighbor of color ``c[x]`` is ``x``."""
    bset = b_vertices(g, c)
    if x in bset:
        raise PreconditionError(f"vertex {x} is a b-vertex")
    cx = c.colors[x]
    return frozenset(
        w for w in g.neighbors(x) if w in bset and all(c.colors[y] != cx for y in g.neighbors(w) if y != x)
    )


def _check_b_and_color(g, c, bset, u, i):
    if u not in bset:
        raise PreconditionError(f"vertex {u} is not a b-vertex")
    if i == c.colors[u] or not 1 <= i <= c.k:
        raise PreconditionError(f"color {i} must be in 1..{c.k} and differ from the color of {u}")


def neighbors_by_color(g: Graph, c: Coloring, u: int, i: int) -> tuple[frozenset[int], frozenset[int]]:
    """Split the color-``i`` neighbors of b-vertex ``u`` into (b-vertices, the rest)."""
    bset = b_vertices(g, c)
    _check_b_and_color(g, c, bset, u, i)
    same = [w for w in g.neighbors(u) if c.colors[w] == i]
    return frozenset(w for w in same if w in bset), frozenset(w for w in same if w not in bset)


def _safe_colors(g, c, bset, x):
    k = c.k
    blocked = c.colors_of(g.closed_neighborhood(x))
    full = set(range(1, k + 1))
    hazards = []
    for w in g.neighbors(x):
        if w in bset:
            continue
        missing = full - {c.colors[y] for y in g.closed_neighborhood(w) if y != x}
        if len(missing) == 1:
            hazards.append(next(iter(missing)))
    return frozenset(i for i in full if i not in blocked and i not in hazards)


def mutability(g: Graph, c: Coloring, x: int) -> MutabilityReport:
    bset = b_vertices(g, c)
    if x in bset:
        raise PreconditionError(f"vertex {x} is a b-vertex")
    return MutabilityReport(x, _safe_colors(g, c, bset, x))


def is_weak(g: Graph, c: Coloring, u: int, i: int) -> WeakReport:
    """Whether color ``i`` is weak in the neighborhood of b-vertex ``u``."""
    bset = b_vertices(g, c)
    _check_b_and_color(g, c, bset, u, i)
    rest = [w for w in g.neighbors(u) if c.colors[w] == i and w not in bset]
    around = set()
    for x in rest:
        around |= g.neighbors(x)
    witnesses = {}
    for x in sorted(rest):
        if not _safe_colors(g, c, bset, x):
            return WeakReport(False, witnesses)
        per_w = {}
        for w in sorted(unique_color_witnesses(g, c, x) - {u}):
            alt = [v for v in sorted(bset) if c.colors[v] == c.colors[w] and v not in around]
            if not alt:
                return WeakReport(False, witnesses)
            per_w[w] = alt[0]
        witnesses[x] = per_w
    return WeakReport(True, witnesses)
