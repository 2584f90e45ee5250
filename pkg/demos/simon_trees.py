"""Ramseyan factorization trees of random NLC expressions and the adjacency they encode.

    python3 demos/simon_trees.py
"""

from lrwkit.nlc import check_cog0, eval_nlc, random_nlc, scode_edge, simon_factorize

for k in (2, 3):
    for n in (100, 2000, 10_000):
        alpha = random_nlc(n, k, seed=n + k)
        ft = simon_factorize(alpha)
        rep = check_cog0(ft, alpha)
        print(f"k = {k}, n = {n:5d}: depth {ft.depth:2d} (bound {ft.depth_bound}), "
              f"cog0 classes {rep.classes}, all cographs {rep.all_cographs}")

alpha = random_nlc(150, 2, seed=0)
g, _ = eval_nlc(alpha)
ft = simon_factorize(alpha)
same = all(scode_edge(ft, alpha, a, b) == g.has_edge(a, b)
           for a in range(150) for b in range(a + 1, 150))
print("adjacency read off the tree agrees with evaluation:", same)
