"""Command-line front end.

Graphs are read and written as edge lists, encodings and reports as JSON,
NLC expressions in the one-letter-per-line text format.  Exit codes: 0
success, 1 verification failure, 2 usage or parse error, 3 size cap.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .activity import analyze, check_invariants, decode_edge, dump
from .constructions import find_semi_induced_half_graph, half_graph, iterated_lex, lozin
from .edgelist import EdgeListError, format_edgelist, parse_edgelist, read_edgelist
from .encoding import ColoredOrder, decode, encode, palette_bound
from .exceptions import (InadmissibleExpressionError, InvariantError,
                         MalformedEncodingError, SizeLimitError)
from .graph import Graph
from .nlc.expression import eval_nlc, nlc_from_order, parse_nlc, random_nlc
from .nlc.factorization import simon_factorize
from .partition import cograph_partition, verify_partition
from .width import LRW_EXACT_CAP, OrderedGraph, greedy_order, lrw_exact, order_width

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3
DECODE_EDGE_PAIR_LIMIT = 200


class UsageError(Exception):
    pass


def parse_order(text: str, n: int) -> tuple[int, ...]:
    try:
        order = tuple(int(x) for x in text.split(",") if x.strip())
    except ValueError:
        raise UsageError(f"order must be comma-separated integers, got {text!r}") from None
    if sorted(order) != list(range(n)):
        raise UsageError(f"order is not a permutation of 0..{n - 1}")
    return order


def _ordered(g: Graph, order_text: Optional[str]) -> tuple[OrderedGraph, bool]:
    """The requested order, or the greedy one (second value False)."""
    if order_text is None:
        return greedy_order(g), False
    return OrderedGraph(g, parse_order(order_text, g.n)), True


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def _read_graph(path: str) -> Graph:
    if path == "-":
        return parse_edgelist(sys.stdin)
    return read_edgelist(path)


def _emit(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _json(doc) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _width_label(given: bool) -> str:
    return "order width of the given order" if given else "upper bound on lrw (greedy order)"


# --- subcommands -------------------------------------------------------------

def cmd_lrw(args) -> int:
    g = _read_graph(args.graph)
    if g.n > LRW_EXACT_CAP:
        raise SizeLimitError(f"exact lrw is capped at n <= {LRW_EXACT_CAP}")
    r, og = lrw_exact(g)
    _emit(f"{r}\norder {','.join(map(str, og.order))}\n", args.output)
    return EXIT_OK


def cmd_width(args) -> int:
    g = _read_graph(args.graph)
    og, given = _ordered(g, args.order)
    prof = order_width(og)
    _emit(_json({"order": list(og.order), "per_prefix": list(prof.per_prefix),
                 "width": prof.width, "label": _width_label(given)}), args.output)
    return EXIT_OK


def cmd_encode(args) -> int:
    g = _read_graph(args.graph)
    og, _ = _ordered(g, args.order)
    _emit(encode(og).to_json(), args.output)
    return EXIT_OK


def cmd_decode(args) -> int:
    co = ColoredOrder.from_json(_read_text(args.encoding))
    _emit(format_edgelist(decode(co)), args.output)
    return EXIT_OK


def _partition_doc(og: OrderedGraph, given: bool) -> dict:
    cp = cograph_partition(og)
    report = verify_partition(og.graph, cp)
    report["label"] = _width_label(given)
    report["order"] = list(og.order)
    report["partition"] = [list(cl) for cl in cp.classes]
    return report


def cmd_partition(args) -> int:
    g = _read_graph(args.graph)
    og, given = _ordered(g, args.order)
    report = _partition_doc(og, given)
    _emit(_json(report), args.output)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_nlc_eval(args) -> int:
    g, _ = eval_nlc(parse_nlc(_read_text(args.expr)))
    _emit(format_edgelist(g), args.output)
    return EXIT_OK


def _tree_doc(ft, node) -> dict:
    value = list(ft.semigroup.elements[node.value])
    if node.is_leaf:
        return {"letter": node.letter, "value": value}
    return {"span": [node.start, node.end], "value": value,
            "children": [_tree_doc(ft, c) for c in node.children]}


def cmd_nlc_factorize(args) -> int:
    alpha = parse_nlc(_read_text(args.expr))
    ft = simon_factorize(alpha)
    doc = {"k": alpha.k, "n": alpha.n, "depth": ft.depth, "depth_bound": ft.depth_bound,
           "tree": _tree_doc(ft, ft.root)}
    _emit(_json(doc), args.output)
    return EXIT_OK


def cmd_nlc_from_order(args) -> int:
    g = _read_graph(args.graph)
    og, _ = _ordered(g, args.order)
    _emit(nlc_from_order(og).to_text(), args.output)
    return EXIT_OK


def cmd_gen_halfgraph(args) -> int:
    _emit(format_edgelist(half_graph(args.ell)), args.output)
    return EXIT_OK


def cmd_gen_lozin(args) -> int:
    g, _ = lozin(args.a, args.m, args.tilde)
    _emit(format_edgelist(g), args.output)
    return EXIT_OK


def cmd_gen_lexpow(args) -> int:
    g, _ = iterated_lex(_read_graph(args.graph), args.m)
    _emit(format_edgelist(g), args.output)
    return EXIT_OK


def cmd_gen_random_nlc(args) -> int:
    _emit(random_nlc(args.n, args.k, args.seed).to_text(), args.output)
    return EXIT_OK


def cmd_detect_halfgraph(args) -> int:
    g = _read_graph(args.graph)
    w = find_semi_induced_half_graph(g, args.order)
    doc = {"ell": args.order, "found": w is not None,
           "a": list(w.a) if w else None, "b": list(w.b) if w else None}
    _emit(_json(doc), args.output)
    return EXIT_OK


def verify_report(og: OrderedGraph, given: bool = True) -> dict:
    """Full pipeline on one ordered graph; ``ok`` is the conjunction of all checks."""
    g = og.graph
    act = analyze(og)
    problems = check_invariants(act)
    co = encode(og, act)
    back = ColoredOrder.from_json(co.to_json())
    roundtrip = decode(co) == g and decode(back) == g
    edge_ok = None
    if g.n <= DECODE_EDGE_PAIR_LIMIT:
        edge_ok = all(decode_edge(act.ft, og, u, v) == g.has_edge(u, v)
                      for u in range(g.n) for v in range(u + 1, g.n))
    palette_ok = co.distinct_triples() <= palette_bound(act.r)
    part = _partition_doc(og, given)
    report = {
        "n": g.n,
        "order": list(og.order),
        "width": act.r,
        "label": _width_label(given),
        "invariant_problems": problems,
        "f_tree_height": act.ft.height(),
        "max_point_load": act.H.max_load,
        "roundtrip_ok": roundtrip,
        "decode_edge_ok": edge_ok,
        "distinct_triples": co.distinct_triples(),
        "palette_bound": palette_bound(act.r),
        "palette_ok": palette_ok,
        "partition": {k: part[k] for k in ("class_count", "f_r", "ok", "chi", "omega")},
    }
    report["ok"] = (not problems and roundtrip and edge_ok is not False and palette_ok
                    and part["ok"])
    return report


def cmd_verify(args) -> int:
    g = _read_graph(args.graph)
    og, given = _ordered(g, args.order)
    report = verify_report(og, given)
    _emit(_json(report), args.output)
    return EXIT_OK if report["ok"] else EXIT_FAIL


def cmd_inspect(args) -> int:
    g = _read_graph(args.graph)
    og, _ = _ordered(g, args.order)
    _emit(_json(dump(analyze(og))), args.output)
    return EXIT_OK


# --- parser ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lrwkit", description="Linear rankwidth toolkit.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(parser_group, name, func, help_text, graph=True, order=False):
        sp = parser_group.add_parser(name, help=help_text)
        if graph:
            sp.add_argument("graph", help="edge-list file ('-' for stdin)")
        if order:
            sp.add_argument("--order", help="comma-separated vertex order (default: greedy)")
        sp.add_argument("-o", "--output", help="output file (default: stdout)")
        sp.set_defaults(func=func)
        return sp

    add(sub, "lrw", cmd_lrw, "exact linear rankwidth and a witness order")
    add(sub, "width", cmd_width, "prefix cut-rank profile of an order", order=True)
    add(sub, "encode", cmd_encode, "encode as a coloured order (JSON)", order=True)
    sp = add(sub, "decode", cmd_decode, "decode a coloured order to an edge list", graph=False)
    sp.add_argument("encoding", help="encoding JSON file")
    add(sub, "partition", cmd_partition, "cograph partition with verification", order=True)
    add(sub, "verify", cmd_verify, "run the full pipeline and all invariants", order=True)
    add(sub, "inspect", cmd_inspect, "dump bases, intervals and the F-tree", order=True)

    nlc = sub.add_parser("nlc", help="linear NLC expressions").add_subparsers(dest="nlc_command",
                                                                              required=True)
    for name, func, help_text in (("eval", cmd_nlc_eval, "evaluate to an edge list"),
                                  ("factorize", cmd_nlc_factorize, "Ramseyan factorization tree")):
        sp = add(nlc, name, func, help_text, graph=False)
        sp.add_argument("expr", help="expression text file")
    add(nlc, "from-order", cmd_nlc_from_order, "expression following an order", order=True)

    gen = sub.add_parser("gen", help="graph generators").add_subparsers(dest="gen_command",
                                                                        required=True)
    sp = add(gen, "halfgraph", cmd_gen_halfgraph, "half-graph H_l", graph=False)
    sp.add_argument("ell", type=int)
    sp = add(gen, "lozin", cmd_gen_lozin, "Lozin's H_{a,m}", graph=False)
    sp.add_argument("a", type=int)
    sp.add_argument("m", type=int)
    sp.add_argument("--tilde", action="store_true", help="add cliques on equal first index")
    sp = add(gen, "lexpow", cmd_gen_lexpow, "iterated lexicographic power")
    sp.add_argument("m", type=int)
    sp = add(gen, "random-nlc", cmd_gen_random_nlc, "random NLC expression", graph=False)
    sp.add_argument("n", type=int)
    sp.add_argument("k", type=int)
    sp.add_argument("--seed", type=int, default=0)

    det = sub.add_parser("detect", help="pattern detectors").add_subparsers(dest="detect_command",
                                                                            required=True)
    sp = add(det, "halfgraph", cmd_detect_halfgraph, "semi-induced half-graph search")
    sp.add_argument("--order", type=int, required=True, help="half-graph order l")
    return p


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    try:
        return args.func(args)
    except SizeLimitError as exc:
        print(f"lrwkit: size limit: {exc}", file=sys.stderr)
        return EXIT_CAP
    except InvariantError as exc:
        print(f"lrwkit: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except (UsageError, EdgeListError, MalformedEncodingError, InadmissibleExpressionError,
            ValueError, OSError) as exc:
        print(f"lrwkit: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
