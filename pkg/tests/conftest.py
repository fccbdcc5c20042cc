import random

import pytest
from hypothesis import strategies as st

from bcontinuity import Graph
from bcontinuity.generators import complete, crown, cycle, hypercube, path, petersen, random_girth, random_tree, star

from oracles import all_edges

_CRITERIA = []


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    terminalreporter.section("acceptance criteria")
    for number, ok, text in sorted(_CRITERIA):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")


@pytest.fixture
def criterion():
    """Record one pass/fail line for an acceptance criterion."""

    class Recorder:
        def __call__(self, number, ok, text):
            _CRITERIA.append((number, bool(ok), text))
            print(f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {text}")
            assert ok, text

    return Recorder()


@st.composite
def graphs(draw, min_n=1, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = all_edges(n)
    mask = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph(n, [p for p, keep in zip(pairs, mask) if keep])


def random_graph(rng, n, p):
    return Graph(n, [e for e in all_edges(n) if rng.random() < p])


def small_corpus():
    """Named graphs with at most 12 vertices."""
    corpus = {
        "P1": path(1),
        "P2": path(2),
        "P5": path(5),
        "C5": cycle(5),
        "C6": cycle(6),
        "C7": cycle(7),
        "C10": cycle(10),
        "C11": cycle(11),
        "C12": cycle(12),
        "K4": complete(4),
        "K5": complete(5),
        "Q3": hypercube(3),
        "crown3": crown(3),
        "crown4": crown(4),
        "crown5": crown(5),
        "petersen": petersen(),
        "star5": star(5),
    }
    for s in range(12):
        corpus[f"tree{s}"] = random_tree(4 + s % 9, seed=s)
    for s in range(10):
        g = random_girth(6 + s % 7, 5 + s % 6, seed=s)
        if g is not None:
            corpus[f"girth{s}"] = g
    rng = random.Random(7)
    for s in range(8):
        corpus[f"gnp{s}"] = random_graph(rng, 5 + s % 4, 0.45)
    return corpus
