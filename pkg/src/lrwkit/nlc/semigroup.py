"""The transformation monoid Gamma_k of all maps [k] -> [k].

Elements are tuples ``f`` with ``f[i]`` the image of colour ``i``, and are
also addressed by a dense index.  The product follows reading order:
``mul(a, b)`` is "first a, then b", i.e. the map ``i -> b[a[i]]``, so that
the value of a concatenation ``xy`` is ``mul(h(x), h(y))``.
"""

from __future__ import annotations

import itertools
from functools import lru_cache


class Gamma:
    """Multiplication table and Green's relations of Gamma_k."""

    def __init__(self, k: int):
        if k < 1:
            raise ValueError("k must be positive")
        if k > 4:
            raise ValueError("Gamma_k tables are only built for k <= 4")
        self.k = k
        self.elements = list(itertools.product(range(k), repeat=k))
        self.index = {f: i for i, f in enumerate(self.elements)}
        size = len(self.elements)
        self.identity = self.index[tuple(range(k))]
        self.table = [
            [self.index[tuple(b[a[i]] for i in range(k))] for b in self.elements]
            for a in self.elements
        ]
        self.idempotent = [self.table[i][i] == i for i in range(size)]
        right = [frozenset(self.table[a]) for a in range(size)]  # aS (S has 1)
        left = [frozenset(self.table[s][a] for s in range(size)) for a in range(size)]
        self.r_class = _class_ids(right)
        self.l_class = _class_ids(left)
        two_sided = [frozenset(self.table[s][x] for s in range(size) for x in right[a])
                     for a in range(size)]
        self.j_ideal = two_sided
        self.j_class = _class_ids(two_sided)

    def __len__(self) -> int:
        return len(self.elements)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def product(self, values) -> int:
        acc = self.identity
        t = self.table
        for v in values:
            acc = t[acc][v]
        return acc

    def j_above(self, a: int, b: int) -> bool:
        """Whether ``a`` is strictly above ``b`` in the J-order."""
        return self.j_ideal[b] < self.j_ideal[a]

    def rank(self, a: int) -> int:
        return len(set(self.elements[a]))


def _class_ids(sets) -> list[int]:
    ids: dict = {}
    return [ids.setdefault(s, len(ids)) for s in sets]


@lru_cache(maxsize=None)
def gamma(k: int) -> Gamma:
    return Gamma(k)


def is_idempotent_map(f) -> bool:
    """Direct test: ``f(i) = j`` implies ``f(j) = j``."""
    return all(f[f[i]] == f[i] for i in range(len(f)))
