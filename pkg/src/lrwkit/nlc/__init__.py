"""Linear NLC expressions, the monoid Gamma_k and Ramseyan factorization trees."""

from .expression import (NlcExpression, NlcLetter, eval_nlc, expression, letter,
                         nlc_back_rows, nlc_from_order, parse_nlc, random_nlc)
from .factorization import FactorizationTree, FNode, simon_factorize
from .semigroup import Gamma, gamma
from .trees import (check_cog0, cog0_coloring, col, eset, find_half_graph_pattern_in_tree,
                    scode_edge)

__all__ = [
    "NlcExpression", "NlcLetter", "eval_nlc", "expression", "letter", "nlc_back_rows",
    "nlc_from_order", "parse_nlc", "random_nlc", "FactorizationTree", "FNode",
    "simon_factorize", "Gamma", "gamma", "check_cog0", "cog0_coloring", "col", "eset",
    "find_half_graph_pattern_in_tree", "scode_edge",
]
