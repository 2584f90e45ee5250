"""Per-vertex colour triples (Class, NC, IC) and the colour-only decoder.

Colours are the gamma values ``1..r+2`` of the activity interval colouring.
A :class:`ColoredOrder` holds nothing but the triples in position order (plus
the vertex labelling of the positions, so the decoded graph can be returned
with the original vertex names).
"""

from __future__ import annotations

import bisect
import json
import math
from dataclasses import dataclass
from typing import Optional

from .activity import Activity, analyze
from .exceptions import MalformedEncodingError
from .graph import Graph, bits, symmetrize
from .width import OrderedGraph


@dataclass(frozen=True)
class VertexTriple:
    cls: tuple  # (gamma, frozenset, ..., frozenset) with r sets
    nc: frozenset
    ic: frozenset

    @property
    def gamma(self) -> int:
        return self.cls[0]

    def to_json(self) -> dict:
        return {
            "cls": [self.cls[0]] + [sorted(s) for s in self.cls[1:]],
            "nc": sorted(self.nc),
            "ic": sorted(self.ic),
        }

    @classmethod
    def from_json(cls, d) -> "VertexTriple":
        try:
            c = d["cls"]
            return cls((int(c[0]),) + tuple(frozenset(map(int, s)) for s in c[1:]),
                       frozenset(map(int, d["nc"])), frozenset(map(int, d["ic"])))
        except (KeyError, TypeError, ValueError, IndexError) as exc:
            raise MalformedEncodingError(f"bad triple {d!r}: {exc}") from None


@dataclass(frozen=True)
class ColoredOrder:
    n: int
    r: int
    triples: tuple[VertexTriple, ...]
    order: tuple[int, ...]

    def palette(self) -> tuple[list[VertexTriple], list[int]]:
        """Distinct triples in order of first appearance and per-position indices."""
        table: dict[VertexTriple, int] = {}
        index = []
        for tr in self.triples:
            if tr not in table:
                table[tr] = len(table)
            index.append(table[tr])
        return list(table), index

    def distinct_triples(self) -> int:
        return len(set(self.triples))

    def bits_per_vertex(self) -> float:
        d = self.distinct_triples()
        return math.log2(d) if d > 1 else 0.0

    def to_json(self) -> str:
        palette, index = self.palette()
        doc = {
            "n": self.n,
            "r": self.r,
            "order": list(self.order),
            "palette": [tr.to_json() for tr in palette],
            "vertex_palette_index": index,
        }
        return json.dumps(doc, indent=1) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "ColoredOrder":
        try:
            doc = json.loads(text)
            n, r = int(doc["n"]), int(doc["r"])
            palette = [VertexTriple.from_json(d) for d in doc["palette"]]
            index = [int(i) for i in doc["vertex_palette_index"]]
            order = tuple(int(v) for v in doc.get("order", range(n)))
        except (KeyError, TypeError, ValueError) as exc:
            raise MalformedEncodingError(f"bad encoding document: {exc}") from None
        if len(index) != n or len(order) != n or sorted(order) != list(range(n)):
            raise MalformedEncodingError("vertex count does not match the index or order")
        if any(not 0 <= i < len(palette) for i in index):
            raise MalformedEncodingError("palette index out of range")
        return cls(n, r, tuple(palette[i] for i in index), order)


def palette_bound(r: int) -> int:
    """(r+2)! * 2^C(r,2) * 3^(r+2)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return math.factorial(r + 2) * 2 ** math.comb(r, 2) * 3 ** (r + 2)


def encode(og: OrderedGraph, act: Optional[Activity] = None) -> ColoredOrder:
    if act is None:
        act = analyze(og)
    r, ai, ft, gamma = act.r, act.ai, act.ft, act.H.gamma
    rows = og.positioned.rows
    n = og.n
    nc = [set() for _ in range(n)]
    ic = [set() for _ in range(n)]
    for u in range(n):
        for v in range(u, ai.tau[u] + 1):
            ic[v].add(gamma[u])
            if (rows[u] >> v) & 1:
                nc[v].add(gamma[u])
    triples = []
    for v in range(n):
        chain = []
        m = 1 << v
        for _ in range(r):
            m = ft.parent[m]
            chain.append(frozenset(gamma[x] for x in bits(m)))
        triples.append(VertexTriple((gamma[v],) + tuple(chain), frozenset(nc[v]), frozenset(ic[v])))
    return ColoredOrder(n, r, tuple(triples), og.order)


def _validate(co: ColoredOrder) -> None:
    top = co.r + 2
    if len(co.triples) != co.n:
        raise MalformedEncodingError("triple count differs from n")
    for p, tr in enumerate(co.triples):
        if len(tr.cls) != co.r + 1:
            raise MalformedEncodingError(f"position {p}: Class has {len(tr.cls) - 1} sets, expected r = {co.r}")
        if not 1 <= tr.gamma <= top:
            raise MalformedEncodingError(f"position {p}: colour {tr.gamma} outside 1..{top}")
        for s in tr.cls[1:]:
            if any(not 1 <= a <= top - 1 for a in s):
                raise MalformedEncodingError(f"position {p}: Class set {sorted(s)} outside 1..{top - 1}")
        if any(not 1 <= a <= top for a in tr.ic):
            raise MalformedEncodingError(f"position {p}: IC outside 1..{top}")
        if not tr.nc <= tr.ic:
            raise MalformedEncodingError(f"position {p}: NC is not contained in IC")
        if tr.gamma not in tr.ic:
            raise MalformedEncodingError(f"position {p}: own colour missing from IC")


def decode(co: ColoredOrder) -> Graph:
    """Rebuild the graph from the triples and the order alone.

    For positions ``u < v``: the members of ``F^i(u)`` (i >= 1) are the last
    positions before ``u`` carrying the colours of ``Class(u)[i]``; ``xi`` is
    the first ``k`` where ``F^k(u)`` is empty or every member ``x`` has its
    colour in ``IC(v)`` with no later occurrence of that colour up to ``v``;
    the edge is present iff an odd number of those colours lie in ``NC(v)``.
    """
    _validate(co)
    n, r = co.n, co.r
    gamma = [tr.gamma for tr in co.triples]
    occ: dict[int, list[int]] = {}
    for p, a in enumerate(gamma):
        occ.setdefault(a, []).append(p)
    nxt = [n] * n
    for lst in occ.values():
        for a, b in zip(lst, lst[1:]):
            nxt[a] = b

    back_rows = [0] * n
    for u in range(n):
        cls = co.triples[u].cls
        levels = [[u]]
        for i in range(1, r + 1):
            members = []
            for a in sorted(cls[i]):
                lst = occ.get(a, [])
                j = bisect.bisect_left(lst, u) - 1
                if j < 0:
                    raise MalformedEncodingError(
                        f"position {u}: colour {a} of Class set {i} has no occurrence before it")
                members.append(lst[j])
            levels.append(members)
        for v in range(u + 1, n):
            ic = co.triples[v].ic
            chosen = None
            for members in levels:
                if not members:
                    chosen = members
                    break
                if all(gamma[x] in ic and nxt[x] > v for x in members):
                    chosen = members
                    break
            if chosen is None:
                chosen = []
            nc = co.triples[v].nc
            if sum(1 for x in chosen if gamma[x] in nc) & 1:
                back_rows[v] |= 1 << u
    rows = symmetrize(n, back_rows)
    h = Graph(n, rows)
    # position p holds vertex order[p]
    inv = [0] * n
    for p, v in enumerate(co.order):
        inv[v] = p
    return h.relabel(inv)
