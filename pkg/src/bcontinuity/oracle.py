"""Exact chromatic number, b-colorings and b-spectra by exhaustive search.

Everything here is exponential in the number of vertices and guarded by a
vertex cap (``DEFAULT_CAP``). Pass ``cap=None`` to lift it at your own risk.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .coloring import Coloring, validate
from .errors import CapExceededError, ImpossibleStateError
from .graph import Graph, m_degree
from .io import to_graph6

DEFAULT_CAP = 14


def _check_cap(g, cap):
    if cap is not None and g.n > cap:
        raise CapExceededError(g.n, cap)


def max_clique_size(g: Graph) -> int:
    """Exact clique number (Bron-Kerbosch with pivoting)."""
    best = 0

    def expand(size, cand, excl):
        nonlocal best
        if not cand and not excl:
            best = max(best, size)
            return
        if size + len(cand) <= best:
            return
        pivot = max(cand | excl, key=lambda v: len(g.neighbors(v) & cand))
        for v in list(cand - g.neighbors(pivot)):
            expand(size + 1, cand & g.neighbors(v), excl & g.neighbors(v))
            cand = cand - {v}
            excl = excl | {v}

    expand(0, frozenset(g.vertices()), frozenset())
    return best


def greedy_coloring(g: Graph) -> list[int]:
    """DSatur greedy coloring, colors from 1."""
    colors = [0] * g.n
    for _ in range(g.n):
        v = max(
            (u for u in g.vertices() if not colors[u]),
            key=lambda u: (len({colors[w] for w in g.neighbors(u)} - {0}), g.degree(u), -u),
        )
        taken = {colors[w] for w in g.neighbors(v)}
        colors[v] = next(c for c in range(1, g.n + 2) if c not in taken)
    return colors


def k_coloring(g: Graph, k: int, fixed: dict[int, int] | None = None, palette=None) -> list[int] | None:
    """Proper coloring with colors from ``palette`` (default ``1..k``), or ``None``.

    ``fixed`` precolors some vertices; their colors need not be in the
    palette but constrain their neighbors. Symmetry between unused palette
    colors is broken only when nothing is precolored.
    """
    palette = list(palette) if palette is not None else list(range(1, k + 1))
    colors = [0] * g.n
    for v, c in (fixed or {}).items():
        colors[v] = c
    free = [v for v in g.vertices() if not colors[v]]
    canonical = not fixed

    def pick():
        best, key = None, None
        for v in free:
            if colors[v]:
                continue
            sat = len({colors[w] for w in g.neighbors(v)} - {0})
            cand = (sat, g.degree(v), -v)
            if key is None or cand > key:
                best, key = v, cand
        return best

    def rec(remaining, used):
        if remaining == 0:
            return True
        v = pick()
        taken = {colors[w] for w in g.neighbors(v)}
        limit = min(used + 1, len(palette)) if canonical else len(palette)
        for idx in range(limit):
            c = palette[idx]
            if c in taken:
                continue
            colors[v] = c
            if rec(remaining - 1, max(used, idx + 1)):
                return True
        colors[v] = 0
        return False

    if not palette and free:
        return None
    return list(colors) if rec(len(free), 0) else None


def chromatic_coloring(g: Graph, cap: int | None = DEFAULT_CAP) -> Coloring:
    """A proper coloring with exactly chi(G) colors."""
    _check_cap(g, cap)
    if g.n == 0:
        return Coloring(g, ())
    upper = greedy_coloring(g)
    best = upper
    for k in range(max_clique_size(g), max(upper)):
        found = k_coloring(g, k)
        if found is not None:
            best = found
            break
    return Coloring(g, best)


def chromatic_number(g: Graph, cap: int | None = DEFAULT_CAP) -> int:
    return chromatic_coloring(g, cap).k


def _search_order(g):
    order, seen = [], set()
    while len(order) < g.n:
        root = max((v for v in g.vertices() if v not in seen), key=lambda v: (g.degree(v), -v))
        seen.add(root)
        frontier = [root]
        while frontier:
            order.extend(frontier)
            nxt = []
            for v in frontier:
                for w in sorted(g.neighbors(v), key=lambda w: (-g.degree(w), w)):
                    if w not in seen:
                        seen.add(w)
                        nxt.append(w)
            frontier = nxt
    return order


def _b_coloring_search(g: Graph, k: int) -> list[int] | None:
    n = g.n
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    order = _search_order(g)
    colors = [0] * n
    cnt = [[0] * (k + 1) for _ in range(n)]
    distinct = [0] * n
    unc = [len(a) for a in adj]

    def feasible():
        # every color needs a vertex that is, or can still become, its b-vertex
        need = set(range(1, k + 1))
        for v in range(n):
            if (k - 1) - distinct[v] > unc[v]:
                continue
            cv = colors[v]
            if cv:
                need.discard(cv)
            else:
                need -= {c for c in need if not cnt[v][c]}
            if not need:
                return True
        return False

    def assign(v, c):
        colors[v] = c
        for w in adj[v]:
            unc[w] -= 1
            if cnt[w][c] == 0:
                distinct[w] += 1
            cnt[w][c] += 1

    def unassign(v, c):
        colors[v] = 0
        for w in adj[v]:
            unc[w] += 1
            cnt[w][c] -= 1
            if cnt[w][c] == 0:
                distinct[w] -= 1

    def rec(pos, used):
        if pos == n:
            return True
        v = order[pos]
        # canonical labelling: a new color is always the next unused one
        for c in range(1, min(used + 1, k) + 1):
            if cnt[v][c]:
                continue
            assign(v, c)
            if feasible() and rec(pos + 1, max(used, c)):
                return True
            unassign(v, c)
        return False

    return list(colors) if rec(0, 0) else None


def exists_b_coloring(g: Graph, k: int, cap: int | None = DEFAULT_CAP, chi: int | None = None) -> Coloring | None:
    """A b-coloring with exactly ``k`` colors, or ``None`` if none exists."""
    _check_cap(g, cap)
    if g.n == 0 or k < 1 or k > m_degree(g):
        return None
    if chi is None:
        chi = chromatic_number(g, cap=None)
    if k < chi:
        return None
    if k == chi:
        return chromatic_coloring(g, cap=None)
    found = _b_coloring_search(g, k)
    if found is None:
        return None
    result = Coloring(g, found)
    report = validate(g, result)
    if not (report.is_b_coloring and report.k == k):
        raise ImpossibleStateError("b-coloring search returned an invalid witness", {"graph6": to_graph6(g), "colors": result.to_text()})
    return result


@dataclass
class SpectrumReport:
    chi: int
    b: int
    m: int
    spectrum: tuple[int, ...]
    witnesses: dict[int, Coloring] = field(repr=False)

    @property
    def is_continuous(self) -> bool:
        return self.spectrum == tuple(range(self.chi, self.b + 1))

    @property
    def gaps(self) -> tuple[int, ...]:
        return tuple(k for k in range(self.chi, self.b + 1) if k not in self.spectrum)

    def to_dict(self) -> dict:
        return {
            "chi": self.chi,
            "b": self.b,
            "m": self.m,
            "spectrum": list(self.spectrum),
            "continuous": self.is_continuous,
            "witnesses": {str(k): c.to_text() for k, c in sorted(self.witnesses.items())},
        }


def b_spectrum(g: Graph, cap: int | None = DEFAULT_CAP) -> SpectrumReport:
    _check_cap(g, cap)
    if g.n == 0:
        raise ValueError("b-spectrum of the empty graph is undefined")
    base = chromatic_coloring(g, cap=None)
    chi, m = base.k, m_degree(g)
    witnesses = {chi: base}
    for k in range(chi + 1, m + 1):
        found = exists_b_coloring(g, k, cap=None, chi=chi)
        if found is not None:
            witnesses[k] = found
    spectrum = tuple(sorted(witnesses))
    return SpectrumReport(chi=chi, b=spectrum[-1], m=m, spectrum=spectrum, witnesses=witnesses)


def b_chromatic_number(g: Graph, cap: int | None = DEFAULT_CAP, chi: int | None = None) -> tuple[int, Coloring]:
    """``(b(G), witness)`` searching downward from ``m(G)``."""
    _check_cap(g, cap)
    if chi is None:
        chi = chromatic_number(g, cap=None)
    for k in range(m_degree(g), chi, -1):
        found = exists_b_coloring(g, k, cap=None, chi=chi)
        if found is not None:
            return k, found
    return chi, chromatic_coloring(g, cap=None)
