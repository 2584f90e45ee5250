import random

import pytest
from hypothesis import given, settings, strategies as st

from lrwkit.exceptions import SizeLimitError
from lrwkit.graph import complete_graph, cycle_graph, empty_graph, path_graph, random_graph
from lrwkit.width import (OrderedGraph, greedy_order, lrw_bruteforce, lrw_exact, order_width,
                          restrict_order)


def test_order_width_examples():
    assert order_width(OrderedGraph.identity(path_graph(5))).width == 1
    assert order_width(OrderedGraph.identity(cycle_graph(5))).width == 2
    assert order_width(OrderedGraph(complete_graph(6), (3, 1, 5, 0, 2, 4))).width == 1
    prof = order_width(OrderedGraph.identity(path_graph(4)))
    assert list(prof.per_prefix) == [1, 1, 1]


def test_ordered_graph_rejects_non_permutations():
    with pytest.raises(ValueError):
        OrderedGraph(path_graph(3), (0, 1, 1))
    with pytest.raises(ValueError):
        OrderedGraph(path_graph(3), (0, 1))


def test_lrw_exact_examples():
    assert lrw_exact(empty_graph(1))[0] == 0
    assert lrw_exact(empty_graph(0))[0] == 0
    assert lrw_exact(cycle_graph(5))[0] == 2
    assert lrw_exact(empty_graph(6))[0] == 0


def test_lrw_bruteforce_examples():
    assert lrw_bruteforce(path_graph(4)) == 1
    assert lrw_bruteforce(complete_graph(4)) == 1
    assert lrw_bruteforce(cycle_graph(6)) == 2
    with pytest.raises(SizeLimitError):
        lrw_bruteforce(path_graph(9))


def test_lrw_exact_cap():
    with pytest.raises(SizeLimitError):
        lrw_exact(path_graph(21))


def test_greedy_order_examples():
    assert order_width(greedy_order(path_graph(4))).width == 1
    assert order_width(greedy_order(complete_graph(4))).width == 1
    assert order_width(greedy_order(cycle_graph(5))).width <= lrw_bruteforce(cycle_graph(5))


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 8), st.floats(0, 1), st.integers(0, 10**6))
def test_exact_matches_bruteforce_and_witness(n, p, seed):
    rng = random.Random(seed)
    g = random_graph(n, p, rng)
    r, og = lrw_exact(g)
    assert r == lrw_bruteforce(g)
    assert order_width(og).width == r
    perm = list(range(n))
    rng.shuffle(perm)
    assert order_width(OrderedGraph(g, tuple(perm))).width >= r
    assert order_width(greedy_order(g)).width >= r


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 10), st.floats(0, 1), st.integers(0, 10**6))
def test_lrw_monotone_under_vertex_deletion(n, p, seed):
    rng = random.Random(seed)
    g = random_graph(n, p, rng)
    r, og = lrw_exact(g)
    drop = rng.randrange(n)
    keep = [v for v in range(n) if v != drop]
    sub = restrict_order(og, keep)
    assert order_width(sub).width <= r
    assert lrw_exact(sub.graph)[0] <= r


def test_lrw_exact_n20_runs():
    g = random_graph(20, 0.3, random.Random(1))
    r, og = lrw_exact(g)
    assert order_width(og).width == r
