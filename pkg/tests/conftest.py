import itertools
import random

import numpy as np
import pytest

from lrwkit.graph import Graph, make_graph, random_graph
from lrwkit.nlc.expression import eval_nlc, random_nlc
from lrwkit.width import OrderedGraph


def dense_rank(matrix) -> int:
    """Plain Gaussian elimination over GF(2) on a numpy 0/1 array."""
    m = np.array(matrix, dtype=np.uint8) % 2
    rank = 0
    rows, cols = m.shape
    for c in range(cols):
        pivot = next((r for r in range(rank, rows) if m[r, c]), None)
        if pivot is None:
            continue
        m[[rank, pivot]] = m[[pivot, rank]]
        for r in range(rows):
            if r != rank and m[r, c]:
                m[r] ^= m[rank]
        rank += 1
    return rank


def nlc_instance(n, k, seed):
    """Random NLC graph with its letter order as witness."""
    alpha = random_nlc(n, k, seed)
    g, _ = eval_nlc(alpha)
    return alpha, OrderedGraph(g, alpha.vertex_order())


def random_ordered(n, p, seed):
    rng = random.Random(seed)
    g = random_graph(n, p, rng)
    order = list(range(n))
    rng.shuffle(order)
    return OrderedGraph(g, tuple(order))


def brute_force_half_graph(g: Graph, ell: int):
    """Exhaustive scan over all ordered 2l-tuples of distinct vertices."""
    for tup in itertools.permutations(range(g.n), 2 * ell):
        a, b = tup[:ell], tup[ell:]
        if all(g.has_edge(a[i], b[j]) == (i <= j) for i in range(ell) for j in range(ell)):
            return a, b
    return None


@pytest.fixture
def p4():
    return make_graph(4, [(0, 1), (1, 2), (2, 3)])
