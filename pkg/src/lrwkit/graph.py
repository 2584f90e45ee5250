"""Simple undirected graphs stored as GF(2) adjacency rows."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from .gf2 import gf2_rank


def bits(mask: int) -> list[int]:
    """Indices of the set bits of ``mask`` in increasing order."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Graph on vertices ``0..n-1``; bit ``j`` of ``rows[i]`` is the edge ij."""

    n: int
    rows: tuple[int, ...]

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.rows[u] >> v) & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        """Sorted list of edges ``(u, v)`` with ``u < v``."""
        out = []
        for u, row in enumerate(self.rows):
            for v in bits(row >> (u + 1)):
                out.append((u, u + 1 + v))
        return out

    @property
    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    @property
    def vertex_mask(self) -> int:
        return (1 << self.n) - 1

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph; new vertex ``i`` is ``vertices[i]``."""
        index = {v: i for i, v in enumerate(vertices)}
        rows = []
        for v in vertices:
            row = 0
            for w in bits(self.rows[v] & mask_of(vertices)):
                row |= 1 << index[w]
            rows.append(row)
        return Graph(len(vertices), tuple(rows))

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph isomorphic to this one in which vertex ``t`` is ``order[t]``."""
        if sorted(order) != list(range(self.n)):
            raise ValueError("order is not a permutation of the vertices")
        return self.induced(order)

    def complement(self) -> "Graph":
        full = self.vertex_mask
        return Graph(self.n, tuple((full ^ r) & ~(1 << i) for i, r in enumerate(self.rows)))

    def to_array(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=bool)
        for u, v in self.edges():
            a[u, v] = a[v, u] = True
        return a

    @classmethod
    def from_array(cls, a: np.ndarray) -> "Graph":
        a = np.asarray(a, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError("adjacency matrix must be square")
        if (a != a.T).any() or a.diagonal().any():
            raise ValueError("adjacency matrix must be symmetric with zero diagonal")
        return cls(a.shape[0], rows_from_bool_matrix(a))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def rows_from_bool_matrix(a: np.ndarray) -> tuple[int, ...]:
    n = a.shape[0]
    if n == 0:
        return ()
    packed = np.packbits(a, axis=1, bitorder="little")
    return tuple(int.from_bytes(r.tobytes(), "little") for r in packed)


def symmetrize(n: int, back_rows: Sequence[int]) -> tuple[int, ...]:
    """Symmetric closure of a relation given as one bitset row per vertex."""
    if n <= 256:
        rows = list(back_rows)
        for v, row in enumerate(back_rows):
            for u in bits(row):
                rows[u] |= 1 << v
        return tuple(rows)
    nbytes = (n + 7) // 8
    buf = b"".join(r.to_bytes(nbytes, "little") for r in back_rows)
    a = np.unpackbits(np.frombuffer(buf, dtype=np.uint8).reshape(n, nbytes), axis=1,
                      bitorder="little")[:, :n].astype(bool)
    return rows_from_bool_matrix(a | a.T)


def make_graph(n: int, edges: Iterable[Iterable[int]]) -> Graph:
    """Build a graph from an edge collection, applying symmetric closure."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    rows = [0] * n
    for e in edges:
        u, v = tuple(e)
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge {{{u}, {v}}} has an endpoint outside 0..{n - 1}")
        if u == v:
            raise ValueError(f"self-loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def path_graph(n: int) -> Graph:
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def complete_bipartite(a: int, b: int) -> Graph:
    return make_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def random_graph(n: int, p: float, rng) -> Graph:
    """G(n, p) sample using a ``random.Random``-like generator."""
    return make_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def cut_rank(g: Graph, x: Iterable[int]) -> int:
    """GF(2) rank of the adjacency matrix between ``x`` and its complement."""
    xm = mask_of(x)
    if xm >> g.n:
        raise ValueError("vertex set is not a subset of V(g)")
    rest = g.vertex_mask ^ xm
    if xm == 0 or rest == 0:
        return 0
    small, other = (xm, rest) if xm.bit_count() <= rest.bit_count() else (rest, xm)
    return gf2_rank(g.rows[v] & other for v in bits(small))


def _components(g: Graph, s: int, complement: bool) -> list[int]:
    comps = []
    todo = s
    while todo:
        seed = todo & -todo
        comp = seed
        frontier = seed
        while frontier:
            reach = 0
            for v in bits(frontier):
                row = g.rows[v]
                reach |= (~row & ~(1 << v)) if complement else row
            reach &= s & ~comp
            comp |= reach
            frontier = reach
        comps.append(comp)
        todo &= ~comp
    return comps


def find_induced_p4(g: Graph, within: Optional[int] = None) -> Optional[tuple[int, int, int, int]]:
    """Some induced path ``a-b-c-d`` inside the vertex mask ``within``, or None."""
    s = g.vertex_mask if within is None else within
    for b in bits(s):
        nb = g.rows[b] & s
        for c in bits(nb):
            if c < b:
                continue
            nc = g.rows[c] & s
            left = nb & ~nc & ~(1 << c)
            right = nc & ~nb & ~(1 << b)
            if not (left and right):
                continue
            for a in bits(left):
                far = right & ~g.rows[a]
                if far:
                    d = (far & -far).bit_length() - 1
                    return (a, b, c, d)
    return None


def is_cograph(g: Graph) -> tuple[bool, Optional[tuple[int, int, int, int]]]:
    """P4-freeness test.

    Recursively splits into components or co-components; a part that is both
    connected and co-connected is prime, and there an induced P4 is searched
    for and returned as witness.
    """
    stack = [g.vertex_mask]
    while stack:
        s = stack.pop()
        if s & (s - 1) == 0:
            continue
        parts = _components(g, s, complement=False)
        if len(parts) == 1:
            parts = _components(g, s, complement=True)
        if len(parts) > 1:
            stack.extend(parts)
            continue
        witness = find_induced_p4(g, s)
        if witness is None:
            raise AssertionError("connected and co-connected part without induced P4")
        return False, witness
    return True, None
