"""Plain-text edge lists.

Format::

    # comment
    n 5
    0 1
    1 2

The ``n`` header fixes the vertex count (so isolated vertices survive); without
it the count is one more than the largest index mentioned.
"""

from __future__ import annotations

from typing import Iterable, TextIO

from .graph import Graph, make_graph


class EdgeListError(ValueError):
    pass


def parse_edgelist(lines: Iterable[str]) -> Graph:
    n = None
    edges = []
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if len(parts) != 2 or n is not None:
                raise EdgeListError(f"line {lineno}: bad or repeated header {raw.strip()!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise EdgeListError(f"line {lineno}: vertex count is not an integer") from None
            if n < 0:
                raise EdgeListError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise EdgeListError(f"line {lineno}: expected 'u v', got {raw.strip()!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListError(f"line {lineno}: non-integer vertex in {raw.strip()!r}") from None
        if u < 0 or v < 0:
            raise EdgeListError(f"line {lineno}: negative vertex index")
        edges.append((u, v))
    if n is None:
        n = 1 + max((max(e) for e in edges), default=-1)
    try:
        return make_graph(n, edges)
    except ValueError as exc:
        raise EdgeListError(str(exc)) from None


def format_edgelist(g: Graph) -> str:
    """Canonical text: header then edges ``u < v`` in lexicographic order."""
    out = [f"n {g.n}"]
    out.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(out) + "\n"


def read_edgelist(path) -> Graph:
    with open(path) as fh:
        return parse_edgelist(fh)


def write_edgelist(g: Graph, fh: TextIO) -> None:
    fh.write(format_edgelist(g))
