"""Linear NLC expressions: letters, evaluation, conversion from an order, text I/O.

Colours are ``0..k-1``.  A letter ``(v, c, e, r)`` inserts vertex ``v`` with
colour ``c``, joins it to every earlier vertex whose current colour is in
``e``, then recolours every vertex (the new one included) by ``r``.
Vertex labels of an expression of length ``n`` are exactly ``0..n-1``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from typing import Iterable, Sequence

from ..exceptions import InadmissibleExpressionError
from ..graph import Graph, symmetrize
from ..width import OrderedGraph


@dataclass(frozen=True)
class NlcLetter:
    v: int
    c: int
    e: frozenset
    r: tuple[int, ...]

    def to_text(self) -> str:
        es = ",".join(str(x) for x in sorted(self.e))
        rs = ",".join(str(x) for x in self.r)
        return f"{self.v} {self.c} e={{{es}}} r=[{rs}]"


@dataclass(frozen=True)
class NlcExpression:
    k: int
    letters: tuple[NlcLetter, ...]

    def __post_init__(self):
        k = self.k
        if k < 1:
            raise InadmissibleExpressionError("width k must be at least 1")
        if not self.letters:
            raise InadmissibleExpressionError("an expression needs at least one letter")
        seen = set()
        for i, a in enumerate(self.letters):
            if a.v in seen:
                raise InadmissibleExpressionError(f"letter {i} reuses vertex label {a.v}")
            seen.add(a.v)
            if not 0 <= a.c < k:
                raise InadmissibleExpressionError(f"letter {i}: colour {a.c} outside 0..{k - 1}")
            if any(not 0 <= x < k for x in a.e):
                raise InadmissibleExpressionError(f"letter {i}: e outside 0..{k - 1}")
            if len(a.r) != k or any(not 0 <= x < k for x in a.r):
                raise InadmissibleExpressionError(f"letter {i}: r is not a map on 0..{k - 1}")
        if seen != set(range(len(self.letters))):
            raise InadmissibleExpressionError("vertex labels must be exactly 0..n-1")

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def n(self) -> int:
        return len(self.letters)

    def vertex_order(self) -> tuple[int, ...]:
        return tuple(a.v for a in self.letters)

    def to_text(self) -> str:
        return "\n".join(a.to_text() for a in self.letters) + "\n"


def letter(v: int, c: int, e: Iterable[int], r: Sequence[int]) -> NlcLetter:
    return NlcLetter(int(v), int(c), frozenset(int(x) for x in e), tuple(int(x) for x in r))


def expression(letters: Sequence[NlcLetter], k: int | None = None) -> NlcExpression:
    if k is None:
        if not letters:
            raise InadmissibleExpressionError("an expression needs at least one letter")
        k = len(letters[0].r)
    return NlcExpression(k, tuple(letters))


def nlc_back_rows(alpha: NlcExpression) -> tuple[list[int], list[int]]:
    """Per vertex label, the bitmask of earlier-inserted neighbours; plus
    the final colour of every vertex."""
    k = alpha.k
    n = alpha.n
    classes = [0] * k
    back = [0] * n
    for a in alpha.letters:
        nb = 0
        for c in a.e:
            nb |= classes[c]
        back[a.v] = nb
        classes[a.c] |= 1 << a.v
        new = [0] * k
        for i, m in enumerate(classes):
            if m:
                new[a.r[i]] |= m
        classes = new
    colors = [0] * n
    for c, m in enumerate(classes):
        while m:
            low = m & -m
            colors[low.bit_length() - 1] = c
            m ^= low
    return back, colors


def eval_nlc(alpha: NlcExpression) -> tuple[Graph, list[int]]:
    back, colors = nlc_back_rows(alpha)
    return Graph(alpha.n, symmetrize(alpha.n, back)), colors


def nlc_from_order(og: OrderedGraph) -> NlcExpression:
    """Expression following ``og``: one colour per class of equal future
    neighbourhood; at most ``2^width + 1`` colours are ever in use."""
    h = og.positioned
    n = h.n
    rows = h.rows
    # live colour -> neighbourhood of its class among positions >= t (bit 0 = t)
    live: dict[int, int] = {}
    raw = []
    kmax = 1
    for t in range(n):
        e = frozenset(c for c, key in live.items() if key & 1)
        own = rows[t] >> (t + 1)
        # join a live class with the same future if there is one
        c_new = next((c for c, key in sorted(live.items()) if key >> 1 == own), None)
        entries = sorted(live.items())
        if c_new is None:
            c_new = 0
            while c_new in live:
                c_new += 1
            entries.append((c_new, own << 1))
        kmax = max(kmax, c_new + 1)
        merged: dict[int, int] = {}
        recolor = {}
        for c, key in entries:
            fut = key >> 1
            target = merged.setdefault(fut, c)
            recolor[c] = target
        raw.append((og.order[t], c_new, e, recolor))
        live = {c: fut for fut, c in merged.items()}
    k = kmax
    letters = []
    for v, c, e, recolor in raw:
        r = tuple(recolor.get(i, i) for i in range(k))
        letters.append(NlcLetter(v, c, e, r))
    return NlcExpression(k, tuple(letters))


def random_nlc(n: int, k: int, seed) -> NlcExpression:
    """Uniform random letters; letter ``i`` carries vertex label ``i``."""
    if n < 1 or k < 1:
        raise ValueError("need n >= 1 and k >= 1")
    rng = random.Random(seed)
    letters = []
    for v in range(n):
        c = rng.randrange(k)
        e = frozenset(i for i in range(k) if rng.random() < 0.5)
        r = tuple(rng.randrange(k) for _ in range(k))
        letters.append(NlcLetter(v, c, e, r))
    return NlcExpression(k, tuple(letters))


_LINE = re.compile(r"^\s*(\d+)\s+(\d+)\s+e=\{([\d,\s]*)\}\s+r=\[([\d,\s]*)\]\s*$")


def parse_nlc(text: str) -> NlcExpression:
    letters = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0]
        if not line.strip():
            continue
        m = _LINE.match(line)
        if not m:
            raise InadmissibleExpressionError(f"line {lineno}: cannot parse {raw.strip()!r}")
        v, c = int(m.group(1)), int(m.group(2))
        e = [int(x) for x in m.group(3).replace(" ", "").split(",") if x]
        r = [int(x) for x in m.group(4).replace(" ", "").split(",") if x]
        letters.append(letter(v, c, e, r))
    if not letters:
        raise InadmissibleExpressionError("no letters found")
    ks = {len(a.r) for a in letters}
    if len(ks) != 1:
        raise InadmissibleExpressionError("letters disagree on the width k")
    return NlcExpression(ks.pop(), tuple(letters))
