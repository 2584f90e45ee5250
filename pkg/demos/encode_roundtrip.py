"""Encode a bounded-width graph as a coloured order and decode it again.

    python3 demos/encode_roundtrip.py
"""

from lrwkit import analyze, decode, encode, palette_bound
from lrwkit.nlc import eval_nlc, random_nlc
from lrwkit.width import OrderedGraph

alpha = random_nlc(40, 3, seed=2)
g, _ = eval_nlc(alpha)
og = OrderedGraph(g, alpha.vertex_order())
act = analyze(og)
print(f"n = {g.n}, edges = {g.num_edges}, width of the letter order r = {act.r}")
print(f"F-tree height {act.ft.height()} (at most r + 1 = {act.r + 1})")
print(f"max point load of the interval graph {act.H.max_load} (at most r + 2 = {act.r + 2})")

co = encode(og, act)
print(f"distinct triples {co.distinct_triples()} of at most {palette_bound(act.r)}"
      f" -> {co.bits_per_vertex():.2f} bits per vertex")
print("decode(encode(G)) == G:", decode(co) == g)
