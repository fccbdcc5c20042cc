import pytest

from bcontinuity import (
    Graph,
    IrisKind,
    IrisWitness,
    PreconditionError,
    b_spectrum,
    color_from_dilated_iris,
    color_from_iris,
    find_dilated_iris,
    find_iris,
    m_degree,
    validate,
    witness_problems,
)
from bcontinuity.generators import complete, cycle, path, random_tree
from bcontinuity.iris import construct, construction_applies, is_constructible

# center 0 with three legs of length 3 (0-1-6, 0-2-3-7, 0-4-5-8)
SPIDER9 = Graph(9, [(0, 1), (1, 6), (0, 2), (2, 3), (3, 7), (0, 4), (4, 5), (5, 8)])
SPIDER7 = Graph(7, [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)])


def tree_p2():
    # 0: inner members 1, 2 (two leaves each); connectors 3, 4 to outer members 5, 6
    edges = [(0, 1), (0, 2), (0, 3), (0, 4), (1, 7), (1, 8), (2, 9), (2, 10), (3, 5), (4, 6)]
    edges += [(5, 11), (5, 12), (6, 13), (6, 14)]
    return Graph(15, edges)


def tree_p0():
    # center 0, degree-2 connectors 1..4, members 5..8 with two leaves each
    edges = [(0, c) for c in range(1, 5)] + [(c, c + 4) for c in range(1, 5)]
    edges += [(m, 9 + 2 * (m - 5)) for m in range(5, 9)] + [(m, 10 + 2 * (m - 5)) for m in range(5, 9)]
    return Graph(17, edges)


def assert_b_coloring(g, c, k):
    report = validate(g, c)
    assert report.is_b_coloring, c.colors
    assert report.k == k


def test_find_iris_examples():
    assert find_iris(path(5), 3) == IrisWitness(2, 3, IrisKind.PLAIN, (1, 3))
    assert find_iris(cycle(10), 4) is None
    assert find_iris(complete(5), 5) == IrisWitness(0, 5, IrisKind.PLAIN, (1, 2, 3, 4))
    with pytest.raises(PreconditionError):
        find_iris(path(3), 1)


def test_find_dilated_iris_examples():
    w = find_dilated_iris(cycle(12), 3)
    assert w == IrisWitness(0, 3, IrisKind.DILATED, (1, 2, 10), {2: 1, 10: 11})
    assert not witness_problems(cycle(12), w)
    assert find_dilated_iris(path(3), 3) is None


def test_hand_built_spider_witness():
    w = IrisWitness(0, 3, IrisKind.DILATED, (1, 3, 5), {3: 2, 5: 4})
    assert witness_problems(SPIDER9, w) == []
    assert is_constructible(SPIDER9, w)
    assert_b_coloring(SPIDER9, color_from_dilated_iris(SPIDER9, w), 3)
    found = find_dilated_iris(SPIDER9, 3)
    assert found is not None and not witness_problems(SPIDER9, found)


def test_witness_problems_reports_each_violation():
    g = SPIDER9
    bad = IrisWitness(0, 3, IrisKind.DILATED, (1, 3, 6), {3: 2})
    problems = " ".join(witness_problems(g, bad))
    assert "not 3-dense" in problems
    assert "connectors must cover" in problems
    shared = IrisWitness(0, 3, IrisKind.DILATED, (1, 3, 3), {3: 2})
    assert any("repeated" in p for p in witness_problems(g, shared))
    plain = IrisWitness(0, 3, IrisKind.PLAIN, (1, 3))
    assert any("inside N(center)" in p for p in witness_problems(g, plain))


def test_shared_neighborhood_rejected():
    # distance-2 members 3 and 4 of the hexagon 0-1-3-5-4-2 share neighbor 5
    g = Graph(6, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 5)])
    w = IrisWitness(0, 3, IrisKind.DILATED, (1, 3, 4), {3: 1, 4: 2})
    assert any("share a neighbor" in p for p in witness_problems(g, w))


def test_plain_construction_on_spider():
    w = find_iris(SPIDER7, 3)
    assert w == IrisWitness(0, 3, IrisKind.PLAIN, (1, 3))
    c = color_from_iris(SPIDER7, w)
    assert_b_coloring(SPIDER7, c, 3)
    assert b_spectrum(SPIDER7).spectrum == (2, 3)


def test_dilated_without_outer_members_delegates():
    w = find_dilated_iris(SPIDER7, 3)
    assert w.s_set == (1, 3, 5) and w.connectors == {}
    c = color_from_dilated_iris(SPIDER7, w)
    assert c == color_from_iris(SPIDER7, IrisWitness(0, 3, IrisKind.PLAIN, (1, 3)))


def test_dilated_four_iris_with_two_inner_members():
    g = tree_p2()
    w = find_dilated_iris(g, 4)
    assert w is not None
    assert set(w.s_set) == {1, 2, 5, 6} and w.connectors == {5: 3, 6: 4}
    assert find_iris(g, 4) is None
    assert_b_coloring(g, color_from_dilated_iris(g, w), 4)


def test_dilated_four_iris_with_no_inner_members():
    g = tree_p0()
    assert m_degree(g) == 4
    w = find_dilated_iris(g, 4)
    assert w == IrisWitness(0, 4, IrisKind.DILATED, (5, 6, 7, 8), {5: 1, 6: 2, 7: 3, 8: 4})
    c = color_from_dilated_iris(g, w)
    assert_b_coloring(g, c, 4)
    assert c[0] not in (c[1], c[2], c[3], c[4])


def test_unconstructible_witness():
    # every connector is itself a member next to the center
    g = Graph(8, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (4, 6), (1, 7)])
    w = IrisWitness(0, 3, IrisKind.DILATED, (1, 2, 3), {3: 1})
    assert witness_problems(g, w) == []
    assert not is_constructible(g, w)
    with pytest.raises(PreconditionError):
        color_from_dilated_iris(g, w)


def test_preconditions():
    with pytest.raises(PreconditionError):
        color_from_iris(cycle(5), IrisWitness(0, 3, IrisKind.PLAIN, (1, 4)))
    c7 = Graph(8, [(i, (i + 1) % 7) for i in range(7)] + [(0, 7)])
    with pytest.raises(PreconditionError):
        color_from_iris(c7, IrisWitness(0, 3, IrisKind.PLAIN, (1, 6)))
    with pytest.raises(PreconditionError):
        color_from_dilated_iris(cycle(8), IrisWitness(0, 3, IrisKind.DILATED, (1, 2, 7), {2: 1}))
    with pytest.raises(PreconditionError):
        color_from_iris(path(5), IrisWitness(2, 3, IrisKind.PLAIN, (0, 1)))  # 0 is a leaf
    with pytest.raises(PreconditionError):
        color_from_iris(SPIDER7, IrisWitness(0, 3, IrisKind.DILATED, (1, 3, 5)))


def test_chromatic_k_returns_chi_coloring():
    g = path(5)
    c = color_from_iris(g, IrisWitness(1, 2, IrisKind.PLAIN, (0,)))
    assert_b_coloring(g, c, 2)


def test_construction_applies():
    assert construction_applies(path(4), IrisWitness(1, 2, IrisKind.PLAIN, (0,)))
    assert not construction_applies(cycle(7), IrisWitness(0, 3, IrisKind.PLAIN, (1, 6)))
    assert construction_applies(cycle(10), IrisWitness(0, 2, IrisKind.DILATED, (1, 2), {2: 1}))
    assert not construction_applies(cycle(9), IrisWitness(0, 2, IrisKind.DILATED, (1, 2), {2: 1}))


def test_constructions_on_random_trees():
    built = 0
    for seed in range(60):
        g = random_tree(8 + seed % 20, seed=seed)
        for k in range(3, m_degree(g) + 1):
            for w in (find_iris(g, k), find_dilated_iris(g, k)):
                if w is None:
                    continue
                assert_b_coloring(g, construct(g, w), k)
                built += 1
    assert built > 40


def test_witness_to_dict():
    w = IrisWitness(0, 3, IrisKind.DILATED, (1, 2, 10), {10: 11, 2: 1})
    assert w.to_dict() == {"center": 0, "k": 3, "kind": "dilated", "S": [1, 2, 10], "connectors": {"2": 1, "10": 11}}
