"""Irises: local structures that force a b-coloring with a prescribed number of colors.

A vertex ``u`` is a *k-iris* when ``k - 1`` of its neighbors have degree at
least ``k - 1``. It is a *dilated k-iris* when ``k`` such vertices sit within
distance 2 of ``u`` and those at distance exactly 2 have pairwise disjoint
neighborhoods. The constructions here color the ball around ``u`` so that
every member of ``S`` is a b-vertex, fence it with color 1 and finish the
rest of the graph with colors ``2..k``.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from itertools import combinations

from .coloring import Coloring, validate
from .errors import ImpossibleStateError, PreconditionError
from .graph import ACYCLIC, Graph, dense_vertices, girth, has_cycle_of_length, layers
from .io import to_graph6
from .oracle import chromatic_coloring, k_coloring

log = logging.getLogger(__name__)


class IrisKind(str, enum.Enum):
    PLAIN = "plain"
    DILATED = "dilated"


@dataclass(frozen=True)
class IrisWitness:
    center: int
    k: int
    kind: IrisKind
    s_set: tuple[int, ...]
    # only for DILATED: distance-2 member of S -> common neighbor with the center
    connectors: dict[int, int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "center": self.center,
            "k": self.k,
            "kind": self.kind.value,
            "S": list(self.s_set),
            "connectors": {str(v): w for v, w in sorted(self.connectors.items())},
        }


def witness_problems(g: Graph, w: IrisWitness) -> list[str]:
    """Every invariant the witness violates; empty when it is valid."""
    problems = []
    u, k = w.center, w.k
    if not 0 <= u < g.n:
        return [f"center {u} out of range"]
    dense = dense_vertices(g, k)
    s = set(w.s_set)
    if len(s) != len(w.s_set):
        problems.append("S has repeated vertices")
    if u in s:
        problems.append("center belongs to S")
    if u not in dense:
        problems.append(f"center {u} is not {k}-dense")
    if not s <= dense:
        problems.append(f"S contains vertices that are not {k}-dense: {sorted(s - dense)}")
    if w.kind is IrisKind.PLAIN:
        if len(s) != k - 1:
            problems.append(f"plain iris needs |S| = {k - 1}, got {len(s)}")
        if not s <= g.neighbors(u):
            problems.append("S is not inside N(center)")
        if w.connectors:
            problems.append("plain iris carries connectors")
        return problems
    lay = layers(g, u)
    near, far = lay.layer(1), lay.layer(2)
    if len(s) != k:
        problems.append(f"dilated iris needs |S| = {k}, got {len(s)}")
    if not s <= near | far:
        problems.append("S is not within distance 2 of the center")
    outer = sorted(s & far)
    for a, b in combinations(outer, 2):
        if g.neighbors(a) & g.neighbors(b):
            problems.append(f"distance-2 members {a} and {b} share a neighbor")
    if set(w.connectors) != set(outer):
        problems.append("connectors must cover exactly the distance-2 members of S")
    for v, c in w.connectors.items():
        if c not in g.neighbors(v) or c not in near:
            problems.append(f"connector {c} does not join {v} to the center")
    if len(set(w.connectors.values())) != len(w.connectors):
        problems.append("connectors are not distinct")
    return problems


def is_constructible(g: Graph, w: IrisWitness) -> bool:
    """Whether the dilated construction can place the center's color.

    With at least one member of S next to the center, some distance-2
    member must have its connector outside S; with none, ``k >= 3``.
    """
    if w.kind is IrisKind.PLAIN:
        return True
    inner = set(w.s_set) & g.neighbors(w.center)
    if not w.connectors:
        return True
    if not inner:
        return w.k >= 3
    return any(c not in inner for c in w.connectors.values())


def find_iris(g: Graph, k: int) -> IrisWitness | None:
    """First center (by index) with ``k - 1`` dense neighbors, S lexicographically smallest."""
    if k < 2:
        raise PreconditionError(f"k must be at least 2, got {k}")
    dense = dense_vertices(g, k)
    for u in g.vertices():
        cand = sorted(g.neighbors(u) & dense)
        if len(cand) >= k - 1:
            return IrisWitness(u, k, IrisKind.PLAIN, tuple(cand[: k - 1]))
    return None


def _disjoint_subsets(g, pool, size):
    """Size-``size`` subsets of ``pool`` (lex order) with pairwise disjoint neighborhoods."""
    chosen = []

    def rec(start, used):
        if len(chosen) == size:
            yield tuple(chosen)
            return
        for idx in range(start, len(pool) - (size - len(chosen)) + 1):
            v = pool[idx]
            if g.neighbors(v) & used:
                continue
            chosen.append(v)
            yield from rec(idx + 1, used | g.neighbors(v))
            chosen.pop()

    yield from rec(0, frozenset())


def find_dilated_iris(g: Graph, k: int) -> IrisWitness | None:
    """Search every center for a dilated ``k``-iris the construction can realize.

    Per center, the number of members taken from N(center) goes from the
    largest feasible value down to zero; the distance-2 part is the first
    disjoint-neighborhood subset in lexicographic order.
    """
    if k < 2:
        raise PreconditionError(f"k must be at least 2, got {k}")
    dense = dense_vertices(g, k)
    for u in g.vertices():
        if u not in dense:
            continue
        lay = layers(g, u)
        near = lay.layer(1)
        inner_pool = sorted(near & dense)
        outer_pool = sorted(lay.layer(2) & dense)
        for p in range(min(k, len(inner_pool)), -1, -1):
            q = k - p
            if q > len(outer_pool):
                continue
            for outer in _disjoint_subsets(g, outer_pool, q):
                connectors = {}
                for v in outer:
                    opts = sorted(g.neighbors(v) & near)
                    connectors[v] = min(opts, key=lambda c: (c in dense, c))
                used = set(connectors.values())
                inner = ([v for v in inner_pool if v not in used] + [v for v in inner_pool if v in used])[:p]
                w = IrisWitness(u, k, IrisKind.DILATED, tuple(sorted(inner + list(outer))), connectors)
                if is_constructible(g, w) and not witness_problems(g, w):
                    return w
    return None


def _complete(g, colors, k, centers):
    """Give each vertex in ``centers`` every missing color on its uncolored neighbors."""
    for v in centers:
        own = colors[v]
        seen = {colors[x] for x in g.neighbors(v) if colors[x]}
        missing = [c for c in range(1, k + 1) if c != own and c not in seen]
        free = sorted(x for x in g.neighbors(v) if not colors[x])
        if len(free) < len(missing):
            raise ImpossibleStateError(f"vertex {v} lacks uncolored neighbors for colors {missing}")
        for x, c in zip(free, missing):
            if any(colors[y] == c for y in g.neighbors(x)):
                raise ImpossibleStateError(f"color {c} at {x} clashes while completing {v}")
            colors[x] = c
        # surplus neighbors also get a color other than 1: left blank they
        # would join the color-1 fence, and at girth 6 two fence vertices can
        # be adjacent (u, v_i, surplus, fence, completion, v_j)
        for x in free[len(missing) :]:
            near = {colors[y] for y in g.neighbors(x)}
            options = [c for c in range(2, k + 1) if c != own and c not in near]
            if not options:
                raise ImpossibleStateError(f"no color for surplus neighbor {x} of {v}")
            colors[x] = options[0]


def _fence_and_finish(g, colors, k):
    """Color the uncolored frontier of the non-1 core with 1, the rest with 2..k."""
    core = [v for v in g.vertices() if colors[v] > 1]
    fence = {x for v in core for x in g.neighbors(v) if not colors[x]}
    ones = {v for v in g.vertices() if colors[v] == 1}
    barrier = fence | ones
    for x in barrier:
        if g.neighbors(x) & barrier:
            raise ImpossibleStateError("color-1 barrier is not a stable set")
    for x in fence:
        colors[x] = 1
    for x in g.vertices():
        if not colors[x] and any(colors[y] > 1 for y in g.neighbors(x)):
            raise ImpossibleStateError("barrier does not separate the core from the rest")
    fixed = {v: c for v, c in enumerate(colors) if c}
    done = k_coloring(g, k, fixed=fixed, palette=range(2, k + 1))
    if done is None:
        raise ImpossibleStateError(f"remaining vertices cannot be colored with 2..{k}")
    return done


def _chi_shortcut(g, k, chi):
    """A chi-coloring when ``k == chi`` (it is already a b-coloring), else ``None``."""
    base = None
    if chi is None:
        base = chromatic_coloring(g, cap=None)
        chi = base.k
    if k < chi:
        raise PreconditionError(f"k = {k} is below the chromatic number {chi}")
    if k == chi:
        return base or chromatic_coloring(g, cap=None)
    return None


def _finalize(g, colors, k, w):
    result = Coloring(g, colors)
    report = validate(g, result)
    if not (report.is_b_coloring and report.k == k):
        raise ImpossibleStateError(
            f"construction from {w.kind.value} {k}-iris did not produce a b-coloring",
            {"graph6": to_graph6(g), "witness": w.to_dict(), "colors": result.to_text()},
        )
    return result


def _with_instance(exc, g, w):
    exc.instance = {"graph6": to_graph6(g), "witness": w.to_dict(), **exc.instance}
    log.error("iris construction failed: %s %s", exc, exc.instance)
    return exc


def color_from_iris(g: Graph, w: IrisWitness, chi: int | None = None) -> Coloring:
    """b-coloring with ``w.k`` colors from a plain iris.

    Needs girth at least 6 and no 7-cycle. ``chi`` may be supplied to skip
    the exact chromatic-number computation.
    """
    if w.kind is not IrisKind.PLAIN:
        raise PreconditionError("color_from_iris needs a plain iris witness")
    if girth(g) < 6 or has_cycle_of_length(g, 7):
        raise PreconditionError("graph must have girth at least 6 and no 7-cycle")
    problems = witness_problems(g, w)
    if problems:
        raise PreconditionError("invalid witness: " + "; ".join(problems))
    k = w.k
    early = _chi_shortcut(g, k, chi)
    if early is not None:
        return early
    colors = [0] * g.n
    colors[w.center] = 1
    for i, v in enumerate(w.s_set, start=2):
        colors[v] = i
    try:
        _complete(g, colors, k, w.s_set)
        if any(colors[v] == 1 for v in g.vertices() if v != w.center):
            raise ImpossibleStateError("center is not the only color-1 vertex of the core")
        colors = _fence_and_finish(g, colors, k)
        return _finalize(g, colors, k, w)
    except ImpossibleStateError as exc:
        raise _with_instance(exc, g, w)


def color_from_dilated_iris(g: Graph, w: IrisWitness, chi: int | None = None) -> Coloring:
    """b-coloring with ``w.k`` colors from a dilated iris; needs girth at least 10.

    Members next to the center take colors ``1..p``, distance-2 members
    ``p+1..k``; connectors take 1. The center copies the color of a
    distance-2 member whose connector is outside S. With no member next to
    the center, the first member's connector takes 2 and the center 3.
    """
    if w.kind is not IrisKind.DILATED:
        raise PreconditionError("color_from_dilated_iris needs a dilated iris witness")
    if girth(g) < 10:
        raise PreconditionError("graph must have girth at least 10")
    problems = witness_problems(g, w)
    if problems:
        raise PreconditionError("invalid witness: " + "; ".join(problems))
    if not is_constructible(g, w):
        raise PreconditionError("every connector lies in S; the center has no admissible color")
    k, u = w.k, w.center
    near = g.neighbors(u)
    inner = [v for v in w.s_set if v in near]
    outer = [v for v in w.s_set if v not in near]
    if not outer:
        plain = IrisWitness(u, k, IrisKind.PLAIN, tuple(inner[: k - 1]))
        return color_from_iris(g, plain, chi)
    early = _chi_shortcut(g, k, chi)
    if early is not None:
        return early
    colors = [0] * g.n
    for i, v in enumerate(inner + outer, start=1):
        colors[v] = i
    if inner:
        for v in outer:
            if w.connectors[v] not in inner:
                colors[w.connectors[v]] = 1
        colors[u] = next(colors[v] for v in outer if w.connectors[v] not in inner)
    else:
        for v in outer:
            colors[w.connectors[v]] = 2 if colors[v] == 1 else 1
        colors[u] = 3
    try:
        for x in g.vertices():
            if colors[x] and any(colors[y] == colors[x] for y in g.neighbors(x)):
                raise ImpossibleStateError(f"core coloring clashes at {x}")
        _complete(g, colors, k, inner + outer)
        colors = _fence_and_finish(g, colors, k)
        return _finalize(g, colors, k, w)
    except ImpossibleStateError as exc:
        raise _with_instance(exc, g, w)


def construct(g: Graph, w: IrisWitness, chi: int | None = None) -> Coloring:
    if w.kind is IrisKind.PLAIN:
        return color_from_iris(g, w, chi)
    return color_from_dilated_iris(g, w, chi)


def construction_applies(g: Graph, w: IrisWitness) -> bool:
    """Whether the girth hypotheses of the matching construction hold."""
    gg = girth(g)
    if w.kind is IrisKind.PLAIN:
        return gg >= 6 and not has_cycle_of_length(g, 7)
    return gg >= 10 or gg == ACYCLIC
