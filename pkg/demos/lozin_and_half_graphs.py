"""Lozin's families under their canonical order, and semi-induced half-graphs.

    python3 demos/lozin_and_half_graphs.py
"""

from lrwkit import find_semi_induced_half_graph, half_graph, lozin, order_width
from lrwkit.graph import complete_bipartite

for a in (2, 3):
    for tilde in (False, True):
        widths = [order_width(lozin(a, m, tilde)[1]).width for m in range(1, 16)]
        print(f"{'~' if tilde else ' '}H_{a},m  m = 1..15: {widths}")

for ell in (1, 2, 3):
    print(f"H_{ell} contains a semi-induced H_{ell}:", find_semi_induced_half_graph(half_graph(ell), ell))
print("K_3,3 contains a semi-induced H_2:", find_semi_induced_half_graph(complete_bipartite(3, 3), 2))
