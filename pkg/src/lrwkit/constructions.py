"""Joins, lexicographic products, half-graphs, Lozin's families and small
exhaustive checks (semi-induced half-graphs, the Ramsey property of powers)."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .exceptions import InvariantError, SizeLimitError
from .graph import Graph, bits, make_graph
from .width import OrderedGraph, order_width

HALF_GRAPH_MAX_ELL = 3
HALF_GRAPH_MAX_N = 14
LEX_POWER_BUDGET = 4096
RAMSEY_MAX_COLORINGS = 200_000


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides; h is shifted by |g|."""
    n = g.n + h.n
    edges = list(g.edges())
    edges += [(g.n + u, g.n + v) for u, v in h.edges()]
    edges += [(u, g.n + v) for u in range(g.n) for v in range(h.n)]
    return make_graph(n, edges)


def lex_product(g: Graph, h: Graph, og: Optional[OrderedGraph] = None,
                oh: Optional[OrderedGraph] = None) -> tuple[Graph, OrderedGraph]:
    """G • H on vertices ``u * |h| + v``; returns the graph and the
    lexicographically composed order.

    The composed order is checked against ``w(og) + w(oh) + 1``.  The extra
    one is needed: an earlier vertex adjacent to the current G-block sees
    the whole rest of that block, a vector outside both factor spans.  The
    plain sum already fails for K3 • 2K1 = K_{2,2,2} (widths 1 + 0, every
    order has width 2); see ``composed_width_excess``.
    """
    og = og if og is not None else OrderedGraph.identity(g)
    oh = oh if oh is not None else OrderedGraph.identity(h)
    nh = h.n
    rows = []
    hfull = (1 << nh) - 1
    block = [0] * g.n
    for u in range(g.n):
        block[u] = sum(hfull << (w * nh) for w in bits(g.rows[u]))
    for u in range(g.n):
        for v in range(nh):
            rows.append(block[u] | (h.rows[v] << (u * nh)))
    prod = Graph(g.n * nh, tuple(rows))
    order = tuple(u * nh + v for u in og.order for v in oh.order)
    composed = OrderedGraph(prod, order)
    excess = composed_width_excess(og, oh, composed)
    if excess > 1:
        raise InvariantError(f"composed order exceeds the factor widths by {excess}")
    return prod, composed


def composed_width_excess(og: OrderedGraph, oh: OrderedGraph, composed: OrderedGraph) -> int:
    """``w(composed) - w(og) - w(oh)``; at most 1 for lexicographic orders."""
    return order_width(composed).width - order_width(og).width - order_width(oh).width


def iterated_lex(g: Graph, m: int, og: Optional[OrderedGraph] = None,
                 budget: int = LEX_POWER_BUDGET) -> tuple[Graph, OrderedGraph]:
    """G^{•m} = (...(G • G) • ...) • G with its composed order."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if g.n ** m > budget:
        raise SizeLimitError(f"|G|^m = {g.n ** m} exceeds the budget {budget}")
    og = og if og is not None else OrderedGraph.identity(g)
    cur, cur_order = g, og
    for _ in range(m - 1):
        cur, cur_order = lex_product(cur, g, cur_order, og)
    return cur, cur_order


def half_graph(ell: int) -> Graph:
    """H_l: a_i = i - 1, b_j = l + j - 1, a_i ~ b_j iff i <= j."""
    if ell < 1:
        raise ValueError("ell must be positive")
    return make_graph(2 * ell, [(i, ell + j) for i in range(ell) for j in range(i, ell)])


def lozin(a: int, m: int, tilde: bool = False) -> tuple[Graph, OrderedGraph]:
    """H_{a,m} (or the variant with cliques on equal first index).

    ``v_{i,j}`` (1-based) is vertex ``(j - 1) * a + (i - 1)``, so the
    column-major canonical order is the identity.  ``v_{i,j} ~ v_{i+1,j'}``
    iff ``j' <= j``.
    """
    if a < 1 or m < 1:
        raise ValueError("a and m must be positive")

    def idx(i, j):
        return (j - 1) * a + (i - 1)

    edges = []
    for i in range(1, a):
        for j in range(1, m + 1):
            for j2 in range(1, j + 1):
                edges.append((idx(i, j), idx(i + 1, j2)))
    if tilde:
        for i in range(1, a + 1):
            for j in range(1, m + 1):
                for j2 in range(j + 1, m + 1):
                    edges.append((idx(i, j), idx(i, j2)))
    g = make_graph(a * m, edges)
    return g, OrderedGraph.identity(g)


@dataclass(frozen=True)
class SemiInducedWitness:
    a: tuple[int, ...]
    b: tuple[int, ...]


def is_semi_induced_half_graph(g: Graph, a, b) -> bool:
    if len(a) != len(b) or len(set(a) | set(b)) != 2 * len(a):
        return False
    return all(g.has_edge(x, y) == (i <= j) for i, x in enumerate(a) for j, y in enumerate(b))


def find_semi_induced_half_graph(g: Graph, ell: int) -> Optional[SemiInducedWitness]:
    """Backtracking search for ``a_1..a_l, b_1..b_l`` with ``a_i ~ b_j iff i <= j``."""
    if ell < 1:
        raise ValueError("ell must be positive")
    if ell > HALF_GRAPH_MAX_ELL or g.n > HALF_GRAPH_MAX_N:
        raise SizeLimitError(
            f"exhaustive half-graph search is capped at l <= {HALF_GRAPH_MAX_ELL}, n <= {HALF_GRAPH_MAX_N}")
    n = g.n
    a: list[int] = []
    b: list[int] = []

    # assignment order a_1, b_1, a_2, b_2, ...
    def ok(x: int, side: str) -> bool:
        if side == "a":
            i = len(a)
            return all(g.has_edge(x, y) == (i <= j) for j, y in enumerate(b))
        j = len(b)
        return all(g.has_edge(y, x) == (i <= j) for i, y in enumerate(a))

    def extend() -> bool:
        if len(b) == ell:
            return True
        side = "a" if len(a) == len(b) else "b"
        used = set(a) | set(b)
        for x in range(n):
            if x in used or not ok(x, side):
                continue
            (a if side == "a" else b).append(x)
            if extend():
                return True
            (a if side == "a" else b).pop()
        return False

    if extend():
        return SemiInducedWitness(tuple(a), tuple(b))
    return None


def _has_induced_copy(g: Graph, host: Graph, within: int) -> bool:
    """Is there an induced copy of ``g`` in ``host`` using only vertices of
    the mask ``within``?"""
    k = g.n
    if k == 0:
        return True
    cand = bits(within)
    image: list[int] = []

    def place(i: int) -> bool:
        if i == k:
            return True
        for x in cand:
            if x in image:
                continue
            if all(host.has_edge(x, image[j]) == g.has_edge(i, j) for j in range(i)):
                image.append(x)
                if place(i + 1):
                    return True
                image.pop()
        return False

    return place(0)


def ramsey_check(g: Graph, m: int, max_colorings: int = RAMSEY_MAX_COLORINGS) -> dict:
    """Every m-colouring of G^{•m} has a monochromatic induced copy of G."""
    if m < 1:
        raise ValueError("m must be at least 1")
    if m > 3:
        raise SizeLimitError("ramsey_check supports m <= 3")
    host, _ = iterated_lex(g, m)
    total = m ** host.n
    if total > max_colorings:
        raise SizeLimitError(f"{total} colourings exceed the cap {max_colorings}")
    checked = 0
    for coloring in itertools.product(range(m), repeat=host.n):
        checked += 1
        classes = [0] * m
        for v, c in enumerate(coloring):
            classes[c] |= 1 << v
        if not any(_has_induced_copy(g, host, cl) for cl in classes):
            return {"ok": False, "colorings_checked": checked, "counterexample": list(coloring),
                    "host_n": host.n}
    return {"ok": True, "colorings_checked": checked, "counterexample": None, "host_n": host.n}
