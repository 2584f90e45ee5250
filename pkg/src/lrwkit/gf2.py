"""GF(2) linear algebra on Python int bitsets.

A vector of length ``m`` is an int whose bit ``j`` is coordinate ``j``; bits at
positions ``>= m`` must be zero.  XOR is vector addition.
"""

from __future__ import annotations

from typing import Hashable, Iterable, Optional


class Gf2Basis:
    """Incremental row-echelon basis with provenance tags.

    Rows are kept sorted by pivot, the pivot of a row being its highest set
    bit.  Every row remembers which inserted vectors it is the XOR of, so a
    vector in the span can be expressed in terms of the original tags.
    """

    __slots__ = ("length", "rows", "pivots", "tags", "_combos")

    def __init__(self, length: int):
        if length < 0:
            raise ValueError("vector length must be non-negative")
        self.length = length
        self.rows: list[int] = []
        self.pivots: list[int] = []
        self.tags: list[Hashable] = []
        self._combos: list[int] = []

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)

    def copy(self) -> "Gf2Basis":
        other = Gf2Basis(self.length)
        other.rows = self.rows[:]
        other.pivots = self.pivots[:]
        other.tags = self.tags[:]
        other._combos = self._combos[:]
        return other

    def _check(self, vec: int) -> None:
        if vec < 0 or vec >> self.length:
            raise ValueError(
                f"vector has bits beyond length {self.length}: {vec:#x}"
            )

    def reduce(self, vec: int) -> tuple[int, int]:
        """Return ``(residual, combo)`` with ``vec = residual ^ XOR(rows in combo)``.

        ``combo`` is a bitmask over indices into :attr:`tags`.  The residual is
        zero iff ``vec`` lies in the span.
        """
        combo = 0
        rows, pivots, combos = self.rows, self.pivots, self._combos
        for i in range(len(rows) - 1, -1, -1):
            if (vec >> pivots[i]) & 1:
                vec ^= rows[i]
                combo ^= combos[i]
        return vec, combo

    def contains(self, vec: int) -> bool:
        return self.reduce(vec)[0] == 0

    def express(self, vec: int) -> Optional[list]:
        """Tags of inserted vectors summing to ``vec``, or None if outside the span."""
        residual, combo = self.reduce(vec)
        if residual:
            return None
        return [self.tags[i] for i in range(len(self.tags)) if (combo >> i) & 1]

    def insert(self, vec: int, tag: Hashable = None) -> bool:
        """Insert in place; returns True iff ``vec`` was outside the span."""
        self._check(vec)
        residual, combo = self.reduce(vec)
        if not residual:
            return False
        idx = len(self.tags)
        self.tags.append(tag)
        combo ^= 1 << idx
        pivot = residual.bit_length() - 1
        pos = len(self.pivots)
        while pos > 0 and self.pivots[pos - 1] > pivot:
            pos -= 1
        self.rows.insert(pos, residual)
        self.pivots.insert(pos, pivot)
        self._combos.insert(pos, combo)
        return True


def basis_insert(basis: Gf2Basis, vec: int, tag: Hashable = None) -> tuple[Gf2Basis, bool]:
    """Functional insertion: the input basis is left untouched."""
    if vec < 0 or vec >> basis.length:
        raise ValueError(f"vector length mismatch for basis of length {basis.length}")
    if basis.contains(vec):
        return basis, False
    out = basis.copy()
    out.insert(vec, tag)
    return out, True


def gf2_rank(vectors: Iterable[int]) -> int:
    """Rank of a family of bitset vectors."""
    pivots: dict[int, int] = {}
    rank = 0
    for vec in vectors:
        while vec:
            top = vec.bit_length() - 1
            row = pivots.get(top)
            if row is None:
                pivots[top] = vec
                rank += 1
                break
            vec ^= row
    return rank
