"""Width of a vertex order and exact linear rankwidth for small graphs."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Optional, Sequence

import numpy as np

from .exceptions import SizeLimitError
from .gf2 import gf2_rank
from .graph import Graph, bits

LRW_EXACT_CAP = 20
BRUTEFORCE_CAP = 8


@dataclass(frozen=True)
class OrderedGraph:
    """A graph with a linear order; ``order[t]`` is the vertex at position ``t``."""

    graph: Graph
    order: tuple[int, ...]

    def __post_init__(self):
        order = tuple(int(v) for v in self.order)
        if sorted(order) != list(range(self.graph.n)):
            raise ValueError("order must be a permutation of the vertices")
        object.__setattr__(self, "order", order)

    @classmethod
    def identity(cls, g: Graph) -> "OrderedGraph":
        return cls(g, tuple(range(g.n)))

    @property
    def n(self) -> int:
        return self.graph.n

    @cached_property
    def rank(self) -> tuple[int, ...]:
        """Inverse permutation: ``rank[v]`` is the position of vertex ``v``."""
        inv = [0] * self.n
        for t, v in enumerate(self.order):
            inv[v] = t
        return tuple(inv)

    @cached_property
    def positioned(self) -> Graph:
        """The graph relabelled so that position ``t`` is vertex ``t``."""
        return self.graph.relabel(self.order)


@dataclass(frozen=True)
class WidthProfile:
    per_prefix: tuple[int, ...]
    width: int


def prefix_cut_ranks(h: Graph) -> list[int]:
    """Cut-ranks of the prefixes ``{0..t}``, t = 0..n-2, of a positioned graph."""
    out = []
    for t in range(h.n - 1):
        out.append(gf2_rank(h.rows[v] >> (t + 1) for v in range(t + 1)))
    return out


def order_width(og: OrderedGraph) -> WidthProfile:
    per = tuple(prefix_cut_ranks(og.positioned))
    return WidthProfile(per, max(per, default=0))


def _rho(rows, full: int, s: int) -> int:
    rest = full & ~s
    if s == 0 or rest == 0:
        return 0
    return gf2_rank(rows[v] & rest for v in bits(s))


def lrw_exact(g: Graph) -> tuple[int, OrderedGraph]:
    """Exact linear rankwidth with a witness order.

    Iterative deepening on the width bound ``k``: a depth-first search over
    vertex subsets that only visits sets of cut-rank at most ``k`` finds an
    order of width ``k`` iff it reaches the full set.  This explores the same
    state space as the subset recurrence ``f(S) = min_v max(f(S - v), rho(S))``
    restricted to states below the bound, with cut-ranks cached across rounds.
    """
    n = g.n
    if n > LRW_EXACT_CAP:
        raise SizeLimitError(f"lrw_exact supports n <= {LRW_EXACT_CAP}, got {n}")
    if n < 2:
        return 0, OrderedGraph.identity(g)
    rows, full = g.rows, g.vertex_mask
    cache: dict[int, int] = {}

    def rho(s: int) -> int:
        r = cache.get(s)
        if r is None:
            r = cache[s] = _rho(rows, full, s)
        return r

    k = 0
    while True:
        dead: set[int] = set()
        path: list[int] = []

        def search(s: int) -> bool:
            if s == full:
                return True
            rest = full & ~s
            for v in bits(rest):
                t = s | (1 << v)
                if t in dead or rho(t) > k:
                    continue
                path.append(v)
                if search(t):
                    return True
                path.pop()
                dead.add(t)
            return False

        if search(0):
            return k, OrderedGraph(g, tuple(path))
        k += 1


def _dense_rank_gf2(m: np.ndarray) -> int:
    """Rank over GF(2) of a 0/1 matrix by row reduction on a numpy copy."""
    a = m.astype(np.uint8) & 1
    rank = 0
    rows, cols = a.shape
    for c in range(cols):
        piv = np.nonzero(a[rank:, c])[0]
        if piv.size == 0:
            continue
        p = rank + piv[0]
        if p != rank:
            a[[rank, p]] = a[[p, rank]]
        mask = a[:, c].astype(bool)
        mask[rank] = False
        a[mask] ^= a[rank]
        rank += 1
        if rank == rows:
            break
    return rank


def cut_rank_table(g: Graph) -> np.ndarray:
    """rho(S) for every subset mask S, by dense elimination (independent path)."""
    n = g.n
    adj = g.to_array()
    table = np.zeros(1 << n, dtype=np.int64)
    for s in range(1, (1 << n) - 1):
        inside = np.array([(s >> i) & 1 for i in range(n)], dtype=bool)
        table[s] = _dense_rank_gf2(adj[np.ix_(inside, ~inside)])
    return table


def lrw_bruteforce(g: Graph) -> int:
    """Minimum order width over all ``n!`` permutations (vectorised)."""
    n = g.n
    if n > BRUTEFORCE_CAP:
        raise SizeLimitError(f"lrw_bruteforce supports n <= {BRUTEFORCE_CAP}, got {n}")
    if n < 2:
        return 0
    table = cut_rank_table(g)
    perms = np.array(list(itertools.permutations(range(n))), dtype=np.int64)
    prefix = np.cumsum(np.left_shift(1, perms), axis=1)[:, :-1]
    return int(table[prefix].max(axis=1).min())


def greedy_order(g: Graph) -> OrderedGraph:
    """Append, one at a time, the vertex giving the smallest prefix cut-rank."""
    rows, full = g.rows, g.vertex_mask
    s = 0
    order = []
    for _ in range(g.n):
        best: Optional[int] = None
        best_r = None
        for v in bits(full & ~s):
            r = _rho(rows, full, s | (1 << v))
            if best_r is None or r < best_r:
                best, best_r = v, r
        order.append(best)
        s |= 1 << best
    return OrderedGraph(g, tuple(order))


def restrict_order(og: OrderedGraph, keep: Sequence[int]) -> OrderedGraph:
    """Order of the induced subgraph on ``keep`` inherited from ``og``."""
    keep_set = set(keep)
    kept = [v for v in og.order if v in keep_set]
    verts = sorted(keep_set)
    index = {v: i for i, v in enumerate(verts)}
    return OrderedGraph(og.graph.induced(verts), tuple(index[v] for v in kept))
