"""Exact clique number and chromatic number for desk-scale graphs.

Both solvers work on bitset rows and refuse inputs beyond a hard cap instead
of silently falling back to a heuristic.
"""

from __future__ import annotations

from .exceptions import SizeLimitError
from .graph import Graph, bits

MAX_CLIQUE_CAP = 64
CHROMATIC_CAP = 25


def _color_bound(rows, cand: int) -> list[tuple[int, int]]:
    """Greedy sequential colouring of ``cand``; returns (vertex, colour) pairs
    sorted by colour so the last entry carries the largest bound."""
    order = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append((v, color))
    return order


def max_clique(g: Graph) -> int:
    """Clique number by branch and bound with a greedy-colouring bound."""
    if g.n > MAX_CLIQUE_CAP:
        raise SizeLimitError(f"max_clique supports n <= {MAX_CLIQUE_CAP}, got {g.n}")
    if g.n == 0:
        return 0
    rows = g.rows
    best = 1

    def expand(size: int, cand: int) -> None:
        nonlocal best
        for v, c in reversed(_color_bound(rows, cand)):
            if size + c <= best:
                return
            new = cand & rows[v]
            if new:
                expand(size + 1, new)
            elif size + 1 > best:
                best = size + 1
            cand &= ~(1 << v)

    expand(0, g.vertex_mask)
    return best


def greedy_coloring(g: Graph, order=None) -> list[int]:
    """First-fit colouring (colours from 0) along ``order`` (default: DSATUR)."""
    n = g.n
    colors = [-1] * n
    if order is None:
        sat = [0] * n
        for _ in range(n):
            v = max((u for u in range(n) if colors[u] < 0),
                    key=lambda u: (bin(sat[u]).count("1"), g.degree(u), -u))
            c = 0
            while (sat[v] >> c) & 1:
                c += 1
            colors[v] = c
            for w in bits(g.rows[v]):
                sat[w] |= 1 << c
        return colors
    for v in order:
        used = 0
        for w in bits(g.rows[v]):
            if colors[w] >= 0:
                used |= 1 << colors[w]
        c = 0
        while (used >> c) & 1:
            c += 1
        colors[v] = c
    return colors


def _colorable(g: Graph, k: int, seed_clique: list[int]) -> bool:
    """DSATUR-style backtracking test for a proper ``k``-colouring.

    Vertices of ``seed_clique`` are pre-coloured 0, 1, ... which breaks the
    colour symmetry without losing solutions.
    """
    n = g.n
    rows = g.rows
    full = (1 << k) - 1
    domain = [full] * n
    colors = [-1] * n
    for c, v in enumerate(seed_clique):
        colors[v] = c
    for v in seed_clique:
        for w in bits(rows[v]):
            domain[w] &= ~(1 << colors[v])
    for v in range(n):
        if colors[v] < 0 and domain[v] == 0:
            return False
    start_used = len(seed_clique)

    def pick() -> int:
        best, key = -1, None
        for v in range(n):
            if colors[v] < 0:
                kv = (bin(domain[v]).count("1"), -g.degree(v))
                if key is None or kv < key:
                    best, key = v, kv
        return best

    def solve(left: int, used: int) -> bool:
        if left == 0:
            return True
        v = pick()
        dom = domain[v]
        # colours above ``used`` are interchangeable: try only the first one
        dom &= (1 << min(used + 1, k)) - 1
        for c in bits(dom):
            colors[v] = c
            changed = []
            ok = True
            for w in bits(rows[v]):
                if colors[w] < 0 and (domain[w] >> c) & 1:
                    domain[w] &= ~(1 << c)
                    changed.append(w)
                    if domain[w] == 0:
                        ok = False
                        break
            if ok and solve(left - 1, max(used, c + 1)):
                return True
            for w in changed:
                domain[w] |= 1 << c
            colors[v] = -1
        return False

    return solve(n - len(seed_clique), start_used)


def _some_max_clique(g: Graph) -> list[int]:
    rows = g.rows
    best: list[int] = []

    def expand(cur: list[int], cand: int) -> None:
        nonlocal best
        for v, c in reversed(_color_bound(rows, cand)):
            if len(cur) + c <= len(best):
                return
            cur.append(v)
            new = cand & rows[v]
            if new:
                expand(cur, new)
            elif len(cur) > len(best):
                best = cur[:]
            cur.pop()
            cand &= ~(1 << v)

    if g.n:
        expand([], g.vertex_mask)
    return best


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number: clique lower bound, DSATUR upper bound, and a
    backtracking search for every intermediate colour count."""
    if g.n > CHROMATIC_CAP:
        raise SizeLimitError(f"chromatic_number supports n <= {CHROMATIC_CAP}, got {g.n}")
    if g.n == 0:
        return 0
    clique = _some_max_clique(g)
    upper = max(greedy_coloring(g)) + 1
    lower = len(clique)
    for k in range(lower, upper):
        if _colorable(g, k, clique):
            return k
    return upper
