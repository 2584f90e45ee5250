import random

import pytest

from lrwkit.constructions import (_has_induced_copy, composed_width_excess, find_semi_induced_half_graph,
                                  half_graph, is_semi_induced_half_graph, iterated_lex, join,
                                  lex_product, lozin, ramsey_check)
from lrwkit.exact import chromatic_number, max_clique
from lrwkit.exceptions import SizeLimitError
from lrwkit.graph import (complete_bipartite, complete_graph, cycle_graph, empty_graph,
                          make_graph, path_graph, random_graph)
from lrwkit.width import OrderedGraph, lrw_bruteforce, lrw_exact, order_width

from conftest import brute_force_half_graph


def test_join_examples():
    assert join(empty_graph(1), empty_graph(1)) == complete_graph(2)
    assert join(complete_graph(2), empty_graph(1)) == complete_graph(3)
    assert join(empty_graph(2), empty_graph(2)) == complete_bipartite(2, 2) == cycle_graph(4).relabel((0, 2, 1, 3))


def test_lex_product_examples():
    h = path_graph(5)
    assert lex_product(empty_graph(1), h)[0] == h
    g, og = lex_product(cycle_graph(5), cycle_graph(5))
    assert g.n == 25 and max_clique(g) == 4
    assert order_width(og).width <= 4


def test_lex_product_adjacency_rule():
    g0, h0 = path_graph(3), cycle_graph(4)
    g, _ = lex_product(g0, h0)
    for u in range(3):
        for v in range(4):
            for u2 in range(3):
                for v2 in range(4):
                    if (u, v) == (u2, v2):
                        continue
                    want = g0.has_edge(u, u2) or (u == u2 and h0.has_edge(v, v2))
                    assert g.has_edge(u * 4 + v, u2 * 4 + v2) == want


def test_lex_product_associative():
    rng = random.Random(1)
    for _ in range(10):
        a, b, c = (random_graph(rng.randint(1, 4), 0.5, rng) for _ in range(3))
        left, _ = lex_product(lex_product(a, b)[0], c)
        right, _ = lex_product(a, lex_product(b, c)[0])
        assert left == right


def test_lex_product_omega_multiplies():
    rng = random.Random(2)
    for _ in range(20):
        a, b = random_graph(rng.randint(1, 6), 0.5, rng), random_graph(rng.randint(1, 6), 0.5, rng)
        assert max_clique(lex_product(a, b)[0]) == max_clique(a) * max_clique(b)


def test_composed_order_within_one_of_sum():
    rng = random.Random(3)
    for _ in range(100):
        a, b = random_graph(rng.randint(1, 6), rng.random(), rng), random_graph(rng.randint(1, 6), rng.random(), rng)
        oa, ob = lrw_exact(a)[1], lrw_exact(b)[1]
        _, oc = lex_product(a, b, oa, ob)
        assert composed_width_excess(oa, ob, oc) <= 1


def test_sum_bound_counterexample():
    # K3 • 2K1 = K_{2,2,2}: factor widths 1 and 0, yet every order has width 2
    g, og = lex_product(complete_graph(3), empty_graph(2))
    assert lrw_exact(complete_graph(3))[0] + lrw_exact(empty_graph(2))[0] == 1
    assert lrw_bruteforce(g) == 2
    assert order_width(og).width == 2


def test_iterated_lex_examples():
    assert iterated_lex(path_graph(4), 1)[0] == path_graph(4)
    assert iterated_lex(complete_graph(2), 2)[0] == complete_graph(4)
    g, _ = iterated_lex(cycle_graph(5), 2)
    assert g.n == 25 and max_clique(g) == 4
    with pytest.raises(SizeLimitError):
        iterated_lex(cycle_graph(5), 6)


def test_c5_power_ratio():
    for n, chi in ((1, 3), (2, 8)):
        g, _ = iterated_lex(cycle_graph(5), n)
        assert chromatic_number(g) == chi
        assert chi / max_clique(g) >= 1.2 * 1.25 ** n


def test_half_graph_examples():
    assert half_graph(1) == complete_graph(2)
    assert half_graph(2).edges() == [(0, 2), (0, 3), (1, 3)]
    assert half_graph(3).num_edges == 6
    assert lrw_exact(half_graph(3))[0] == 1


def test_lozin_examples():
    g, og = lozin(2, 2)
    # v11 = 0, v21 = 1, v12 = 2, v22 = 3
    assert g.edges() == [(0, 1), (1, 2), (2, 3)]
    gt, _ = lozin(2, 2, tilde=True)
    assert set(gt.edges()) == set(g.edges()) | {(0, 2), (1, 3)}
    assert og.order == (0, 1, 2, 3)


def test_lozin_widths_recorded():
    # canonical-order widths; constant from m = 3 on, smaller at m = 2
    expect = {(2, False): (1, 2), (2, True): (2, 3), (3, False): (2, 3), (3, True): (3, 4)}
    for (a, tilde), (w2, w) in expect.items():
        widths = [order_width(lozin(a, m, tilde)[1]).width for m in range(2, 41)]
        assert widths[0] == w2 and set(widths[1:]) == {w}


def test_semi_induced_examples():
    assert find_semi_induced_half_graph(half_graph(3), 3) is not None
    assert find_semi_induced_half_graph(empty_graph(6), 1) is None
    assert find_semi_induced_half_graph(complete_bipartite(3, 3), 2) is None
    with pytest.raises(SizeLimitError):
        find_semi_induced_half_graph(half_graph(4), 4)
    with pytest.raises(SizeLimitError):
        find_semi_induced_half_graph(empty_graph(15), 1)


def test_semi_induced_matches_brute_force():
    rng = random.Random(4)
    for _ in range(60):
        g = random_graph(rng.randint(2, 9), rng.random(), rng)
        for ell in (1, 2):
            w = find_semi_induced_half_graph(g, ell)
            ref = brute_force_half_graph(g, ell)
            assert (w is None) == (ref is None)
            if w is not None:
                assert is_semi_induced_half_graph(g, w.a, w.b)


def test_ramsey_examples():
    rep = ramsey_check(complete_graph(2), 2)
    assert rep["ok"] and rep["colorings_checked"] == 16
    assert ramsey_check(empty_graph(1), 3)["ok"]
    rep = ramsey_check(path_graph(3), 2)
    assert rep["ok"] and rep["colorings_checked"] == 512 and rep["host_n"] == 9
    with pytest.raises(SizeLimitError):
        ramsey_check(cycle_graph(5), 2)


def test_induced_copy_search():
    host = path_graph(3)
    assert not _has_induced_copy(path_graph(3), host, 0b011)
    assert _has_induced_copy(path_graph(3), host, 0b111)
    assert not _has_induced_copy(complete_graph(2), empty_graph(4), 0b1111)
    assert not _has_induced_copy(path_graph(3), complete_graph(4), 0b1111)
