"""
Stable sets, cliques, colorings and domination
==============================================

Exact searches on small boards, each answer checked by an independent
verifier.
"""

from queensgraph.board import build_graph
from queensgraph.combinat import (
    chromatic_number_exact,
    domination_bounds,
    domination_number,
    max_clique,
    max_stable_set,
    modular_coloring,
    verify_coloring,
)

###############################################################################
# Non-attacking queens and mutually attacking queens
# --------------------------------------------------

for n in range(2, 9):
    g = build_graph(n)
    print(f"n={n}  alpha={max_stable_set(g).value}  omega={max_clique(g).value}")

print("eight-queens solutions:", max_stable_set(build_graph(8), count_all=True).count)

###############################################################################
# Colorings
# ---------
# Coloring square (i, j) by j - 2i mod n works when n is coprime to 6.

for n in (5, 6, 7):
    ok, _ = verify_coloring(build_graph(n), modular_coloring(n))
    print(f"n={n}  modular coloring proper: {ok}  chromatic number: {chromatic_number_exact(build_graph(n)).value}")

###############################################################################
# Domination
# ----------

for n in range(1, 12):
    res = domination_number(build_graph(n))
    print(f"n={n:2d}  gamma={res.value}  bounds={domination_bounds(n)}  witness={res.labels()}")
