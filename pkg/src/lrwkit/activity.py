"""Neighbour bases, activity intervals, the F-tree and the interval colouring.

Everything here works in *positions*: the ordered graph is relabelled so
that position ``t`` is vertex ``t`` (``OrderedGraph.positioned``).  Vertex
sets are int bitmasks over positions.  ``N^{>t}(v)`` is then simply
``row[v] >> (t + 1)``, a GF(2) vector of length ``n - t - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .exceptions import InvariantError
from .gf2 import Gf2Basis
from .graph import Graph, bits
from .width import OrderedGraph, order_width


@dataclass
class NeighborBases:
    """The active bases ``B_t`` of an ordered graph.

    ``bases[t]`` lists ``B_t`` in increasing position order and
    ``echelon[t]`` is the GF(2) basis of their future neighbourhoods, tagged
    by position, from which any ``N^{>t}(v)``, ``v <= t``, can be expressed.
    ``leaving[t]`` maps every position that drops out of the basis at ``t``
    (i.e. lies in ``B_{t-1} + {t}`` but not in ``B_t``) to its expression.
    """

    n: int
    rows: tuple[int, ...]
    bases: list[list[int]]
    echelon: list[Gf2Basis]
    leaving: list[dict[int, int]]

    def future(self, t: int, v: int) -> int:
        return self.rows[v] >> (t + 1)

    def expression(self, t: int, v: int) -> int:
        """The unique subset of ``B_t`` (as mask) whose future neighbourhoods
        sum to ``N^{>t}(v)``."""
        if v > t:
            raise ValueError("expressions are defined only for v <= t")
        residual, combo = self.echelon[t].reduce(self.future(t, v))
        if residual:
            raise InvariantError(f"N^>{t}({v}) is outside the span of B_{t}")
        tags = self.echelon[t].tags
        return sum(1 << tags[i] for i in bits(combo))


def neighbor_bases(og: OrderedGraph) -> NeighborBases:
    """Sweep positions left to right maintaining the lexicographically least basis.

    A position outside ``B_{t-1}`` stays expressible by earlier positions at
    every later ``t``, so only ``B_{t-1}`` and ``t`` itself are candidates
    for ``B_t``; inserting them in increasing order keeps exactly those whose
    future neighbourhood is independent of all earlier ones.
    """
    h = og.positioned
    n = h.n
    rows = h.rows
    bases: list[list[int]] = []
    echelon: list[Gf2Basis] = []
    leaving: list[dict[int, int]] = []
    prev: list[int] = []
    for t in range(n):
        basis = Gf2Basis(n - t - 1)
        kept = []
        gone = {}
        for v in prev + [t]:
            vec = rows[v] >> (t + 1)
            residual, combo = basis.reduce(vec)
            if residual:
                basis.insert(vec, v)
                kept.append(v)
            else:
                gone[v] = sum(1 << basis.tags[i] for i in bits(combo))
        bases.append(kept)
        echelon.append(basis)
        leaving.append(gone)
        prev = kept
    return NeighborBases(n, rows, bases, echelon, leaving)


def neighbor_bases_by_definition(og: OrderedGraph) -> list[list[int]]:
    """``B_t`` straight from the definition, rebuilding a basis over all
    ``v <= t`` at every position.  Quadratic; used as a test oracle."""
    h = og.positioned
    out = []
    for t in range(h.n):
        basis = Gf2Basis(h.n - t - 1)
        out.append([v for v in range(t + 1) if basis.insert(h.rows[v] >> (t + 1), v)])
    return out


@dataclass
class ActivityIndex:
    """tau, activity intervals and F_0 per position."""

    tau: list[int]
    f0: list[int]

    @property
    def n(self) -> int:
        return len(self.tau)

    def interval(self, v: int) -> tuple[int, int]:
        return (v, self.tau[v])

    def active(self, v: int) -> bool:
        return self.tau[v] > v

    def tau_of(self, m: int) -> int:
        """tau(M) = min over members; only meaningful for non-empty M."""
        return min(self.tau[v] for v in bits(m))

    def in_interval(self, m: int, w: int) -> bool:
        """Whether ``w`` lies in ``I_M = [max M, tau(M)]`` (empty M: never)."""
        if not m:
            return False
        return m.bit_length() - 1 <= w <= self.tau_of(m)


def activity_index(og: OrderedGraph, nb: NeighborBases) -> ActivityIndex:
    n = nb.n
    tau = [-1] * n
    f0 = [0] * n
    for t in range(n):
        for v, expr in nb.leaving[t].items():
            tau[v] = t
            f0[v] = expr
    if n and min(tau) < 0:
        raise InvariantError("some position never left the active basis")
    return ActivityIndex(tau, f0)


class FTree:
    """The F-map on the node set Z (bitmasks over positions), rooted at 0."""

    def __init__(self, ai: ActivityIndex, parent: dict[int, int]):
        self.ai = ai
        self.parent = parent

    @property
    def nodes(self) -> list[int]:
        return sorted(self.parent, key=lambda m: (m.bit_count(), m))

    def f(self, m: int) -> int:
        return self.parent[m]

    def iterate(self, m: int, k: int) -> int:
        for _ in range(k):
            m = self.parent[m]
        return m

    def chain(self, m: int) -> list[int]:
        """``[M, F(M), F^2(M), ..., ∅]``."""
        out = [m]
        while m:
            m = self.parent[m]
            out.append(m)
        return out

    def height(self) -> int:
        """Largest number of F-steps needed to reach the root from any node."""
        return max(len(self.chain(m)) - 1 for m in self.parent)


def _f_step(ai: ActivityIndex, m: int) -> int:
    if not m:
        return 0
    members = bits(m)
    t = min(ai.tau[v] for v in members)
    lowest = [v for v in members if ai.tau[v] == t]
    if len(lowest) != 1:
        raise InvariantError(f"set {members} has {len(lowest)} members with minimal tau")
    v = lowest[0]
    return m ^ (1 << v) ^ ai.f0[v]


def f_tree(og: OrderedGraph, ai: ActivityIndex) -> FTree:
    """Close ∅ and all singletons under F."""
    parent = {0: 0}
    for v in range(ai.n):
        m = 1 << v
        while m not in parent:
            img = _f_step(ai, m)
            if img and ai.tau_of(img) <= ai.tau_of(m):
                raise InvariantError(f"tau does not increase along F at {bits(m)}")
            parent[m] = img
            m = img
    return FTree(ai, parent)


def xi(ft: FTree, ai: ActivityIndex, u: int, v: int) -> int:
    """Least ``k`` with ``v`` in ``I_{F^k(u)}`` or ``F^k(u) = ∅`` (positions)."""
    if u == v:
        raise ValueError("xi needs distinct positions")
    m = 1 << u
    k = 0
    while m and not ai.in_interval(m, v):
        m = ft.parent[m]
        k += 1
    return k


def decode_edge(ft: FTree, og: OrderedGraph, u: int, v: int) -> bool:
    """Adjacency of vertices ``u`` and ``v`` of ``og.graph`` recovered by
    iterating F from the earlier one and taking a neighbourhood parity."""
    pu, pv = og.rank[u], og.rank[v]
    if pu == pv:
        raise ValueError("decode_edge needs distinct vertices")
    if pu > pv:
        pu, pv = pv, pu
    m = ft.iterate(1 << pu, xi(ft, ft.ai, pu, pv))
    rows = og.positioned.rows
    return bool(bin(rows[pv] & m).count("1") & 1)


@dataclass
class IntervalGraphH:
    """Activity intervals, their point loads and the colouring gamma (1-based)."""

    r: int
    intervals: list[tuple[int, int]]
    point_load: list[int]
    gamma: list[int]

    @property
    def max_load(self) -> int:
        return max(self.point_load, default=0)


def interval_graph(og: OrderedGraph, ai: ActivityIndex, r: Optional[int] = None) -> IntervalGraphH:
    """Inactive positions get colour r+2; active ones are first-fit coloured by
    left endpoint with colours 1..r+1."""
    if r is None:
        r = order_width(og).width
    n = ai.n
    load = [0] * n
    for v in range(n):
        for t in range(v, ai.tau[v] + 1):
            load[t] += 1
    gamma = [0] * n
    # active intervals still open, as (end, colour)
    busy_until = [-1] * (r + 2)
    for v in range(n):
        if not ai.active(v):
            gamma[v] = r + 2
            continue
        for c in range(1, r + 2):
            if busy_until[c] < v:
                gamma[v] = c
                busy_until[c] = ai.tau[v]
                break
        else:
            raise InvariantError(f"more than r+1 = {r + 1} active intervals overlap at {v}")
    return IntervalGraphH(r, [ai.interval(v) for v in range(n)], load, gamma)


@dataclass
class Activity:
    """Bundle of all activity structures of one ordered graph."""

    og: OrderedGraph
    r: int
    nb: NeighborBases
    ai: ActivityIndex
    ft: FTree
    H: IntervalGraphH


def analyze(og: OrderedGraph) -> Activity:
    r = order_width(og).width
    nb = neighbor_bases(og)
    ai = activity_index(og, nb)
    ft = f_tree(og, ai)
    return Activity(og, r, nb, ai, ft, interval_graph(og, ai, r))


def n_xor(rows, m: int) -> int:
    """``N_⊕(M)`` as a bitmask."""
    acc = 0
    for v in bits(m):
        acc ^= rows[v]
    return acc


def check_invariants(act: Activity) -> list[str]:
    """All structural claims about the activity structures; returns a list of
    violated claims (empty when everything holds)."""
    problems = []
    og, r, nb, ai, ft, H = act.og, act.r, act.nb, act.ai, act.ft, act.H
    n = og.n
    rows = nb.rows
    for t in range(n):
        if len(nb.bases[t]) > r:
            problems.append(f"|B_{t}| = {len(nb.bases[t])} exceeds width {r}")
        for v in range(t + 1):
            if nb.echelon[t].reduce(nb.future(t, v))[0]:
                problems.append(f"B_{t} does not span N^>{t}({v})")
    if n and nb.bases[n - 1]:
        problems.append("B at the last position is not empty")
    taus = {}
    for v in range(n):
        t = ai.tau[v]
        if t < v:
            problems.append(f"tau({v}) < {v}")
        if (n_xor(rows, 1 << v) ^ n_xor(rows, ai.f0[v])) >> (t + 1):
            problems.append(f"F_0({v}) does not express N^>tau({v})")
        if ai.f0[v]:
            if not (ai.f0[v].bit_length() - 1 < v <= t < ai.tau_of(ai.f0[v])):
                problems.append(f"interval inequality fails for F_0({v})")
        if ai.active(v):
            if t in taus:
                problems.append(f"active {taus[t]} and {v} share tau = {t}")
            taus[t] = v
    for m, img in ft.parent.items():
        if not m:
            if img:
                problems.append("F(∅) != ∅")
            continue
        if img == m:
            problems.append(f"non-root fixed point {bits(m)}")
        tm = ai.tau_of(m)
        top = m.bit_length() - 1
        active = top < tm
        if m.bit_count() > 1 and not active:
            problems.append(f"node {bits(m)} is neither singleton nor active")
        if img:
            # max F(M) <= max M <= tau(M) < tau(F(M)), the middle one strict for active M
            ok = img.bit_length() - 1 <= top <= tm < ai.tau_of(img)
            if not ok:
                problems.append(f"tau/max inequalities fail at {bits(m)}")
            if img & ~sum(1 << b for b in nb.bases[tm]):
                problems.append(f"F({bits(m)}) not inside B_tau(M)")
        if (n_xor(rows, m) ^ n_xor(rows, img)) >> (tm + 1):
            problems.append(f"N_⊕ not preserved beyond tau(M) at {bits(m)}")
        if ft.iterate(m, r + 1):
            problems.append(f"F^(r+1)({bits(m)}) is not empty")
    if len(ft.parent) > (2 ** r) * n + 1:
        problems.append(f"|Z| = {len(ft.parent)} exceeds 2^r n + 1")
    if H.max_load > r + 2:
        problems.append(f"point load {H.max_load} exceeds r+2")
    for u in range(n):
        if (H.gamma[u] == r + 2) == ai.active(u):
            problems.append(f"gamma({u}) = r+2 does not match inactivity")
    for t in range(n):
        covering = [u for u in range(t + 1) if ai.tau[u] >= t]
        if len({H.gamma[u] for u in covering}) != len(covering):
            problems.append(f"overlapping intervals share a colour at {t}")
    last = {}
    for v in range(n):
        last[H.gamma[v]] = v
        for u in nb.bases[v]:
            if last.get(H.gamma[u]) != u:
                problems.append(f"{u} in B_{v} is not the last of its colour up to {v}")
    return problems


def dump(act: Activity) -> dict:
    """JSON-ready diagnostic view (positions and the vertex at each)."""
    og, ai, ft, H = act.og, act.ai, act.ft, act.H
    return {
        "n": og.n,
        "r": act.r,
        "order": list(og.order),
        "vertices": [
            {
                "position": t,
                "vertex": og.order[t],
                "tau": ai.tau[t],
                "interval": [t, ai.tau[t]],
                "active": ai.active(t),
                "gamma": H.gamma[t],
                "f0": bits(ai.f0[t]),
            }
            for t in range(og.n)
        ],
        "bases": [list(b) for b in act.nb.bases],
        "f_tree": [{"node": bits(m), "image": bits(ft.parent[m])} for m in ft.nodes],
        "point_load": H.point_load,
    }
