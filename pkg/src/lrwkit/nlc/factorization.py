"""Ramseyan factorization trees for the morphism ``a -> r_a`` into Gamma_k.

A node is a leaf (one letter), a binary node, or a node whose children all
evaluate to one common idempotent.  The construction recurses on the
J-order of Gamma_k:

* the word is cut greedily into *super-letters* ``u c`` where the value of
  ``u`` stays strictly J-above the J-class ``J`` of the whole word and
  ``u c`` falls into ``J`` (``u`` is factorised recursively, one J-class
  higher), plus a tail that never reaches ``J``;
* the super-letters form a word all of whose infixes lie in ``J``.  Cut
  points of such a word carry a key (prefix value, R-class of the next
  factor); between two cuts with equal key the factor is an idempotent
  determined by the key.  Splitting at all cuts of one key gives a prefix,
  a run of equal idempotents (one node) and a suffix, and recursion on the
  pieces sees strictly fewer keys.

The depth bound ``3 k^k`` is checked at the end instead of being trusted.
"""

from __future__ import annotations

from typing import Optional

from ..exceptions import InvariantError
from .expression import NlcExpression
from .semigroup import Gamma, gamma

EXHAUSTIVE_KEYS = 3


class FNode:
    __slots__ = ("children", "value", "letter", "height", "parent", "index",
                 "start", "end", "_pre", "_suf")

    def __init__(self, children, value, letter=-1):
        self.children = children
        self.value = value
        self.letter = letter
        self.height = 1 + max((c.height for c in children), default=0)
        self.parent: Optional[FNode] = None
        self.index = 0
        self.start = letter
        self.end = letter
        self._pre = None
        self._suf = None

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def __repr__(self) -> str:
        if self.is_leaf:
            return f"Leaf({self.letter})"
        return f"Node[{self.start}:{self.end + 1}] h={self.height} deg={len(self.children)}"


class _Builder:
    def __init__(self, g: Gamma):
        self.g = g
        self.t = g.table

    def binary(self, a: FNode, b: FNode) -> FNode:
        return FNode([a, b], self.t[a.value][b.value])

    def join(self, parts: list[FNode]) -> FNode:
        """Combine consecutive parts with binary nodes, as shallow as possible."""
        parts = list(parts)
        while len(parts) > 1:
            best = min(range(len(parts) - 1),
                       key=lambda i: max(parts[i].height, parts[i + 1].height))
            parts[best:best + 2] = [self.binary(parts[best], parts[best + 1])]
        return parts[0]

    def uniform(self, items: list[FNode]) -> Optional[int]:
        v = items[0].value
        if self.g.idempotent[v] and all(it.value == v for it in items):
            return v
        return None

    def factor(self, items: list[FNode]) -> FNode:
        m = len(items)
        if m == 1:
            return items[0]
        if m == 2:
            return self.binary(items[0], items[1])
        if self.uniform(items) is not None:
            return FNode(items, items[0].value)
        g, t = self.g, self.t
        total = g.product(it.value for it in items)
        target = g.j_class[total]
        supers: list[FNode] = []
        cur: list[FNode] = []
        acc = g.identity
        for it in items:
            nxt = t[acc][it.value]
            cur.append(it)
            if g.j_class[nxt] == target:
                if len(cur) == 1:
                    supers.append(it)
                else:
                    supers.append(self.binary(self.factor(cur[:-1]), it))
                cur = []
                acc = g.identity
            else:
                acc = nxt
        if not supers:
            raise InvariantError("word never reaches the J-class of its own value")
        body = supers[0] if len(supers) == 1 else self.smooth(supers, None)
        if cur:
            return self.binary(body, self.factor(cur))
        return body

    def smooth(self, xs: list[FNode], base: Optional[int]) -> FNode:
        """Factorise a word all of whose infixes lie in one J-class.

        ``base`` is the value of everything to the left of ``xs`` inside the
        enclosing smooth word (None at its left end); keys use absolute
        prefix values so that sub-words inherit them unchanged.
        """
        m = len(xs)
        if m == 1:
            return xs[0]
        if m == 2:
            return self.binary(xs[0], xs[1])
        if self.uniform(xs) is not None:
            return FNode(xs, xs[0].value)
        g, t = self.g, self.t
        prefix_vals = []
        acc = base
        for x in xs:
            acc = x.value if acc is None else t[acc][x.value]
            prefix_vals.append(acc)
        keys = [(prefix_vals[s], g.r_class[xs[s + 1].value]) for s in range(m - 1)]
        counts: dict = {}
        for kk in keys:
            counts[kk] = counts.get(kk, 0) + 1
        candidates = sorted(counts, key=lambda kk: (-counts[kk], kk))
        if len(candidates) > EXHAUSTIVE_KEYS:
            candidates = candidates[:1]
        best = None
        for kappa in candidates:
            node = self.split(xs, base, prefix_vals, keys, kappa)
            if best is None or node.height < best.height:
                best = node
        return best

    def split(self, xs, base, prefix_vals, keys, kappa) -> FNode:
        t = self.t
        cuts = [s for s, kk in enumerate(keys) if kk == kappa]
        bounds = [0] + [s + 1 for s in cuts] + [len(xs)]
        pieces = []
        for a, b in zip(bounds, bounds[1:]):
            piece_base = base if a == 0 else prefix_vals[a - 1]
            pieces.append(self.smooth(xs[a:b], piece_base))
        prefix, blocks, suffix = pieces[0], pieces[1:-1], pieces[-1]
        if not blocks:
            return self.binary(prefix, suffix)
        e = blocks[0].value
        if not self.g.idempotent[e] or any(b.value != e for b in blocks):
            raise InvariantError("blocks between equal cut keys are not one idempotent")
        run = list(blocks)
        parts_left, parts_right = [prefix], [suffix]
        if prefix.value == e:
            run.insert(0, prefix)
            parts_left = []
        if suffix.value == e:
            run.append(suffix)
            parts_right = []
        middle = run[0] if len(run) == 1 else FNode(run, e)
        return self.join(parts_left + [middle] + parts_right)


class FactorizationTree:
    """A Ramseyan factorization tree over the letters of an expression."""

    def __init__(self, alpha: NlcExpression, root: FNode):
        self.alpha = alpha
        self.k = alpha.k
        self.semigroup = gamma(alpha.k)
        self.root = root
        self.leaves: list[FNode] = [None] * alpha.n  # type: ignore[list-item]
        self._finalize()

    @property
    def depth(self) -> int:
        return self.root.height

    @property
    def depth_bound(self) -> int:
        return 3 * self.k ** self.k

    def _finalize(self) -> None:
        t = self.semigroup.table
        ident = self.semigroup.identity
        stack = [self.root]
        order = []
        while stack:
            node = stack.pop()
            order.append(node)
            for i, c in enumerate(node.children):
                c.parent = node
                c.index = i
                stack.append(c)
        for node in reversed(order):
            if node.is_leaf:
                self.leaves[node.letter] = node
                continue
            node.start = node.children[0].start
            node.end = node.children[-1].end
            pre = [ident]
            for c in node.children:
                pre.append(t[pre[-1]][c.value])
            suf = [ident]
            for c in reversed(node.children):
                suf.append(t[c.value][suf[-1]])
            suf.reverse()
            node._pre = pre
            node._suf = suf

    def nodes(self):
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            stack.extend(reversed(node.children))

    def left_of(self, node: FNode, i: int) -> int:
        """Value of the children of ``node`` strictly before child ``i``."""
        return node._pre[i]

    def right_of(self, node: FNode, i: int) -> int:
        """Value of the children of ``node`` strictly after child ``i``."""
        return node._suf[i + 1]

    def ancestors(self, letter: int) -> list[FNode]:
        """Path from the leaf of ``letter`` up to the root (leaf first)."""
        out = []
        node = self.leaves[letter]
        while node is not None:
            out.append(node)
            node = node.parent
        return out

    def lca(self, z1: int, z2: int) -> tuple[FNode, FNode, FNode]:
        """Least common ancestor and the two children of it on the paths."""
        a1 = self.ancestors(z1)
        a2 = self.ancestors(z2)
        i, j = len(a1) - 1, len(a2) - 1
        while i > 0 and j > 0 and a1[i - 1] is a2[j - 1]:
            i -= 1
            j -= 1
        return a1[i], a1[i - 1], a2[j - 1]

    def check(self) -> list[str]:
        """Ramseyan property, leaf order and depth bound; returns problems."""
        problems = []
        g = self.semigroup
        for node in self.nodes():
            if node.is_leaf:
                if node.value != g.index[self.alpha.letters[node.letter].r]:
                    problems.append(f"leaf {node.letter} has the wrong value")
                continue
            vals = [c.value for c in node.children]
            if g.product(vals) != node.value:
                problems.append(f"{node!r}: value is not the product of its children")
            if len(vals) == 1:
                problems.append(f"{node!r}: unary node")
            elif len(vals) > 2 and not (len(set(vals)) == 1 and g.idempotent[vals[0]]):
                problems.append(f"{node!r}: children are not one common idempotent")
        letters = [leaf.letter for leaf in self.nodes() if leaf.is_leaf]
        if letters != list(range(self.alpha.n)):
            problems.append("leaves do not read the expression left to right")
        if self.depth > self.depth_bound:
            problems.append(f"depth {self.depth} exceeds 3k^k = {self.depth_bound}")
        return problems


def simon_factorize(alpha: NlcExpression, check: bool = True) -> FactorizationTree:
    """Ramseyan factorization tree of ``alpha`` of depth at most ``3 k^k``.

    Supported for k <= 4 (the multiplication table of Gamma_4 has 256^2
    entries).  Leaves are indexed by letter position.
    """
    g = gamma(alpha.k)
    leaves = [FNode([], g.index[a.r], i) for i, a in enumerate(alpha.letters)]
    root = _Builder(g).factor(leaves)
    tree = FactorizationTree(alpha, root)
    if check:
        problems = tree.check()
        if problems:
            raise InvariantError("; ".join(problems[:5]))
    return tree
