"""Lexicographic powers of C5: clique number, chromatic number, composed order.

    python3 demos/c5_powers.py        (the chromatic number of C5•C5 takes ~10 s)
"""

from lrwkit import cograph_partition, iterated_lex, order_width, verify_partition
from lrwkit.exact import chromatic_number, max_clique
from lrwkit.graph import cycle_graph

for n in (1, 2):
    g, og = iterated_lex(cycle_graph(5), n)
    chi, omega = chromatic_number(g), max_clique(g)
    print(f"C5^{n}: |V| = {g.n}, omega = {omega}, chi = {chi}, "
          f"chi/omega = {chi / omega:.3f}, composed order width = {order_width(og).width}")

g, og = iterated_lex(cycle_graph(5), 2)
rep = verify_partition(g, cograph_partition(og))
print(f"cograph partition of C5•C5: {rep['class_count']} classes (bound {rep['f_r']}), ok = {rep['ok']}")
