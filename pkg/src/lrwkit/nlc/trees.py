"""Adjacency, cograph colouring and half-graph search read off a factorization tree.

For a node ``beta`` and a letter ``z`` below it, ``recol_beta(z)`` is the
value of the letters of ``beta`` before ``z``, ``col_beta(z)`` the colour of
``z`` at the end of ``beta`` and ``eset_beta(z)`` the set of colours that
``recol_beta(z)`` sends into ``e_z``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..exceptions import InvariantError
from ..graph import Graph, bits, is_cograph, make_graph
from .expression import NlcExpression, nlc_back_rows
from .factorization import FactorizationTree, FNode


def _context(ft: FactorizationTree, z: int, top: FNode) -> tuple[int, int]:
    """(value before z inside top, value after z inside top)."""
    t = ft.semigroup.table
    left = right = ft.semigroup.identity
    node = ft.leaves[z]
    while node is not top:
        parent = node.parent
        if parent is None:
            raise ValueError("node is not an ancestor of the letter")
        left = t[ft.left_of(parent, node.index)][left]
        right = t[right][ft.right_of(parent, node.index)]
        node = parent
    return left, right


def col(ft: FactorizationTree, z: int, beta: FNode) -> int:
    a = ft.alpha.letters[z]
    _, right = _context(ft, z, beta)
    after = ft.semigroup.elements[right]
    return after[a.r[a.c]]


def eset(ft: FactorizationTree, z: int, beta: FNode) -> frozenset:
    a = ft.alpha.letters[z]
    left, _ = _context(ft, z, beta)
    before = ft.semigroup.elements[left]
    return frozenset(i for i in range(ft.k) if before[i] in a.e)


def scode_edge(ft: FactorizationTree, alpha: NlcExpression, z1: int, z2: int) -> bool:
    """Adjacency of the vertices of letters ``z1 < z2`` (letter positions).

    With ``beta`` their least common ancestor and ``d1, d2`` its children on
    the two paths: when ``d1`` and ``d2`` are consecutive the colour of
    ``z1`` at the end of ``d1`` is tested against ``eset_{d2}(z2)``;
    otherwise all children share an idempotent value and the colour at the
    end of ``beta`` is tested against ``eset_beta(z2)``.
    """
    if z1 == z2:
        raise ValueError("scode_edge needs two distinct letters")
    if z1 > z2:
        z1, z2 = z2, z1
    beta, d1, d2 = ft.lca(z1, z2)
    if d2.index == d1.index + 1:
        return col(ft, z1, d1) in eset(ft, z2, d2)
    return col(ft, z1, beta) in eset(ft, z2, beta)


def letter_profiles(ft: FactorizationTree, z: int) -> list[tuple[FNode, int, frozenset]]:
    """``(beta, col_beta(z), eset_beta(z))`` for every ancestor, leaf first."""
    g = ft.semigroup
    t = g.table
    a = ft.alpha.letters[z]
    own = a.r[a.c]
    left = right = g.identity
    node = ft.leaves[z]
    out = [(node, own, a.e)]
    while node.parent is not None:
        parent = node.parent
        left = t[ft.left_of(parent, node.index)][left]
        right = t[right][ft.right_of(parent, node.index)]
        before = g.elements[left]
        out.append((parent, g.elements[right][own],
                    frozenset(i for i in range(ft.k) if before[i] in a.e)))
        node = parent
    return out


def _kappa(node: FNode) -> int:
    return 1 if node.parent is None else 1 + node.index % 2


def cog0_coloring(ft: FactorizationTree, alpha: NlcExpression) -> list[tuple]:
    """Colour of every letter: the vector of ``(kappa, col, eset)`` over its
    ancestors from the root down to the leaf; ``kappa`` alternates 1, 2
    along the children of each node."""
    out = []
    for z in range(alpha.n):
        prof = letter_profiles(ft, z)
        out.append(tuple((_kappa(b), c, tuple(sorted(e))) for b, c, e in reversed(prof)))
    return out


@dataclass
class Cog0Report:
    classes: int
    largest: int
    max_height: int
    bound: int
    all_cographs: bool
    faithful: bool

    @property
    def ok(self) -> bool:
        return self.all_cographs and self.faithful and self.max_height <= self.bound


def check_cog0(ft: FactorizationTree, alpha: NlcExpression,
               back: Optional[list[int]] = None) -> Cog0Report:
    """Every colour class is P4-free and its restricted tree is a cotree of
    height at most ``3 k^k`` (marks checked against every pair)."""
    colors = cog0_coloring(ft, alpha)
    if back is None:
        back, _ = nlc_back_rows(alpha)
    vertex = [a.v for a in alpha.letters]
    groups: dict = {}
    for z, c in enumerate(colors):
        groups.setdefault(c, []).append(z)
    all_cog = True
    faithful = True
    max_h = 0
    for zs in groups.values():
        verts = [vertex[z] for z in zs]
        sub = _induced_from_back(back, verts)
        if len(zs) >= 4 and not is_cograph(sub)[0]:
            all_cog = False
        paths = {z: ft.ancestors(z) for z in zs}
        marks: dict[int, bool] = {}
        for i, z1 in enumerate(zs):
            for j in range(i + 1, len(zs)):
                z2 = zs[j]
                beta, _, _ = ft.lca(z1, z2)
                adj = sub.has_edge(i, j)
                if marks.setdefault(id(beta), adj) != adj:
                    faithful = False
        for z in zs:
            h = 1 + sum(1 for node in paths[z][1:] if id(node) in marks)
            max_h = max(max_h, h)
    return Cog0Report(len(groups), max(len(v) for v in groups.values()), max_h,
                      ft.depth_bound, all_cog, faithful)


def _induced_from_back(back: list[int], verts: list[int]) -> Graph:
    index = {v: i for i, v in enumerate(verts)}
    mask = 0
    for v in verts:
        mask |= 1 << v
    edges = []
    for v in verts:
        for u in bits(back[v] & mask):
            edges.append((index[u], index[v]))
    return make_graph(len(verts), edges)


@dataclass
class TreeHalfGraphWitness:
    node: FNode
    pattern: tuple  # (c_x, e_x, c_y, e_y)
    letters: list[int]  # x_1, y_1, ..., x_l, y_l
    half_a: list[int]  # extracted semi-induced half-graph (vertex labels)
    half_b: list[int]


def find_half_graph_pattern_in_tree(ft: FactorizationTree, alpha: NlcExpression, ell: int,
                                    back: Optional[list[int]] = None) -> Optional[TreeHalfGraphWitness]:
    """Letters ``x_1 y_1 ... x_l y_l`` in pairwise distinct children of one
    node with constant ``(col, eset)`` per side, ``c_x in e_y`` and
    ``c_y not in e_x``.  When found, letters in non-consecutive children are
    kept greedily and the resulting half-graph is validated against the
    evaluated graph (``InvariantError`` if it does not hold).  For ``l < 3``
    the extraction may come back empty."""
    if ell < 1:
        raise ValueError("ell must be positive")
    # per internal node: per child, the set of (col, eset) types below it
    types: dict[int, list[dict]] = {}
    nodes: dict[int, FNode] = {}
    for z in range(alpha.n):
        prof = letter_profiles(ft, z)
        for depth in range(len(prof) - 1):
            child = prof[depth][0]
            beta, c, e = prof[depth + 1]
            per_child = types.setdefault(id(beta), [dict() for _ in beta.children])
            nodes[id(beta)] = beta
            per_child[child.index].setdefault((c, e), z)
    for key in sorted(types, key=lambda i: (nodes[i].start, -nodes[i].end)):
        beta, per_child = nodes[key], types[key]
        if len(per_child) < 2 * ell:
            continue
        present = set()
        for d in per_child:
            present.update(d)
        xs = sorted((c, tuple(sorted(e))) for c, e in present)
        for cx, ex in xs:
            for cy, ey in xs:
                if cx not in ey or cy in ex:
                    continue
                tx, ty = (cx, frozenset(ex)), (cy, frozenset(ey))
                seq = _alternate(per_child, tx, ty, ell, gap=1)
                if seq is None:
                    continue
                target = ell // 3
                chosen = _alternate(per_child, tx, ty, max(1, target), gap=2)
                if chosen is None:
                    if target:
                        raise InvariantError("no non-consecutive sub-pattern of order l/3")
                    chosen = []
                half_a = [alpha.letters[z].v for z in chosen[0::2]]
                half_b = [alpha.letters[z].v for z in chosen[1::2]]
                if back is None:
                    back, _ = nlc_back_rows(alpha)
                _validate_half_graph(back, half_a, half_b)
                return TreeHalfGraphWitness(beta, (cx, ex, cy, ey), seq, half_a, half_b)
    return None


def _alternate(per_child, tx, ty, ell, gap):
    """Greedy scan for x, y, x, y, ... in increasing children (child indices
    at least ``gap`` apart); returns the letters or None."""
    out = []
    last = -gap
    want = tx
    for i, d in enumerate(per_child):
        if i - last < gap:
            continue
        z = d.get(want)
        if z is None:
            continue
        out.append(z)
        last = i
        if len(out) == 2 * ell:
            return out
        want = ty if want == tx else tx
    return None


def _validate_half_graph(back, a, b) -> None:
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            if _adj(back, x, y) != (i <= j):
                raise InvariantError(f"extracted half-graph fails at a_{i + 1}, b_{j + 1}")


def _adj(back, u, v) -> bool:
    return bool((back[u] >> v) & 1) or bool((back[v] >> u) & 1)
