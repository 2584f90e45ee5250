"""Partition into cographs by the (Class, NC) equivalence.

Within one class the F-tree, restricted to the class and to the pairwise
meeting points of its members, is a cotree: every internal node is either a
join (all pairs meeting there adjacent) or a union (none adjacent).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .activity import Activity, analyze
from .encoding import encode
from .exact import CHROMATIC_CAP, chromatic_number, max_clique
from .exceptions import InvariantError
from .graph import Graph, is_cograph
from .width import OrderedGraph


def f_bound(r: int) -> int:
    """3 (r+2)! 2^C(r+1,2)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    return 3 * math.factorial(r + 2) * 2 ** math.comb(r + 1, 2)


@dataclass
class Cotree:
    """Restricted F-tree of one class.

    ``marks`` maps each internal node (an F-tree node, as position mask) to
    ``"join"`` or ``"union"``; ``parent`` links leaves (``("leaf", vertex)``)
    and internal nodes to the next kept ancestor (``None`` at the top).
    """

    vertices: list[int]
    marks: dict[int, str]
    parent: dict
    height: int


@dataclass
class CographPartition:
    r: int
    classes: list[list[int]]
    cotrees: list[Cotree]

    def class_of(self) -> dict[int, int]:
        return {v: i for i, cl in enumerate(self.classes) for v in cl}


def _meet(chain_u: list[int], chain_v_set: set[int]) -> int:
    for m in chain_u:
        if m in chain_v_set:
            return m
    raise InvariantError("F-chains do not meet at the root")


def _cotree(act: Activity, members: list[int]) -> Cotree:
    """``members`` are vertices of the graph; F-tree nodes use positions."""
    og, ft = act.og, act.ft
    rows = og.positioned.rows
    pos = {v: og.rank[v] for v in members}
    chains = {v: ft.chain(1 << pos[v]) for v in members}
    chain_sets = {v: set(c) for v, c in chains.items()}
    marks: dict[int, str] = {}
    for i, u in enumerate(members):
        for v in members[i + 1:]:
            m = _meet(chains[u], chain_sets[v])
            if m == 1 << pos[u] or m == 1 << pos[v]:
                raise InvariantError(f"class member {u} or {v} is an F-ancestor of the other")
            adj = bool((rows[pos[u]] >> pos[v]) & 1)
            mark = "join" if adj else "union"
            if marks.setdefault(m, mark) != mark:
                raise InvariantError(f"mixed adjacency at cotree node {m:#x}")
    parent: dict = {}
    height = 1
    for v in members:
        kept = [m for m in chains[v][1:] if m in marks]
        path = [("leaf", v)] + kept
        for a, b in zip(path, path[1:]):
            parent[a] = b
        if path:
            parent.setdefault(path[-1], None)
        height = max(height, len(path))
    return Cotree(sorted(members), marks, parent, height)


def cograph_partition(og: OrderedGraph, act: Optional[Activity] = None) -> CographPartition:
    if act is None:
        act = analyze(og)
    co = encode(og, act)
    groups: dict[tuple, list[int]] = {}
    for p, tr in enumerate(co.triples):
        groups.setdefault((tr.cls, tr.nc), []).append(og.order[p])
    classes = sorted((sorted(vs) for vs in groups.values()), key=lambda c: c[0])
    cotrees = [_cotree(act, cl) for cl in classes]
    for cl, ct in zip(classes, cotrees):
        ok, witness = is_cograph(og.graph.induced(cl))
        if not ok:
            raise InvariantError(f"class {cl} contains an induced P4 {[cl[i] for i in witness]}")
    return CographPartition(act.r, classes, cotrees)


def verify_partition(g: Graph, cp: CographPartition, exact_limit: int = CHROMATIC_CAP) -> dict:
    """Re-check a partition; failed checks are reported, not raised."""
    seen: list[int] = sorted(v for cl in cp.classes for v in cl)
    partition_ok = seen == list(range(g.n))
    per_class = []
    for cl, ct in zip(cp.classes, cp.cotrees):
        flag, _ = is_cograph(g.induced(cl))
        faithful = True
        for i, u in enumerate(cl):
            for v in cl[i + 1:]:
                node = _lca_in(ct, u, v)
                if (ct.marks.get(node) == "join") != g.has_edge(u, v):
                    faithful = False
        per_class.append({"size": len(cl), "cograph": flag, "faithful": faithful,
                          "cotree_height": ct.height})
    bound = f_bound(cp.r)
    report = {
        "n": g.n,
        "r": cp.r,
        "class_count": len(cp.classes),
        "f_r": bound,
        "partition_ok": partition_ok,
        "classes": per_class,
        "all_cographs": all(c["cograph"] for c in per_class),
        "all_faithful": all(c["faithful"] for c in per_class),
        "heights_ok": all(c["cotree_height"] <= cp.r + 2 for c in per_class),
        "count_ok": len(cp.classes) <= bound,
        "chi": None,
        "omega": None,
        "chi_ok": None,
    }
    if g.n <= exact_limit:
        chi = chromatic_number(g)
        omega = max_clique(g)
        report.update(chi=chi, omega=omega,
                      chi_ok=chi <= len(cp.classes) * omega and chi <= bound * omega)
    report["ok"] = all(report[k] for k in ("partition_ok", "all_cographs", "all_faithful",
                                            "heights_ok", "count_ok")) and report["chi_ok"] is not False
    return report


def _lca_in(ct: Cotree, u: int, v: int):
    up = []
    node = ("leaf", u)
    while node is not None:
        up.append(node)
        node = ct.parent.get(node)
    seen = set(up)
    node = ("leaf", v)
    while node is not None:
        if node in seen:
            return node
        node = ct.parent.get(node)
    return None
