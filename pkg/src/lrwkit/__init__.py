"""lrwkit: linear rankwidth, activity-interval encodings, cograph partitions
and linear NLC expressions over int-bitset graphs."""

from .activity import analyze, check_invariants, decode_edge, f_tree, neighbor_bases
from .constructions import (find_semi_induced_half_graph, half_graph, iterated_lex, join,
                            lex_product, lozin, ramsey_check)
from .encoding import ColoredOrder, decode, encode, palette_bound
from .exceptions import (InadmissibleExpressionError, InvariantError, MalformedEncodingError,
                         SizeLimitError)
from .graph import Graph, make_graph
from .partition import cograph_partition, f_bound, verify_partition
from .width import OrderedGraph, greedy_order, lrw_bruteforce, lrw_exact, order_width

__version__ = "0.1.0"

__all__ = [
    "analyze", "check_invariants", "decode_edge", "f_tree", "neighbor_bases",
    "find_semi_induced_half_graph", "half_graph", "iterated_lex", "join", "lex_product",
    "lozin", "ramsey_check", "ColoredOrder", "decode", "encode", "palette_bound",
    "InadmissibleExpressionError", "InvariantError", "MalformedEncodingError",
    "SizeLimitError", "Graph", "make_graph", "cograph_partition", "f_bound",
    "verify_partition", "OrderedGraph", "greedy_order", "lrw_bruteforce", "lrw_exact",
    "order_width",
]
