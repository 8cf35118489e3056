"""
Folding the board into an equitable partition
=============================================

Folding every square into one eighth of the board groups squares that
look alike under the board's symmetries.  Neighbor counts between groups
are constant, so the small quotient matrix shares the main eigenvalues of
the full graph.
"""

import numpy as np

from queensgraph.board import build_graph
from queensgraph.equipart import folded_partition, divisibility_chain, divisor_matrix
from queensgraph.exactlin import char_poly

###############################################################################
# Labels on the 6x6 board
# -----------------------

pi = folded_partition(6)
print(np.array(pi.grid()))
print("cell sizes:", pi.cell_sizes())

###############################################################################
# The quotient matrix and its characteristic polynomial
# -----------------------------------------------------

B = divisor_matrix(build_graph(6), pi)
print(np.array(B))
print(char_poly(B))
print(np.round(sorted(np.linalg.eigvals(np.array(B, float)).real, reverse=True), 2))

###############################################################################
# The divisibility chain
# ----------------------
# The main polynomial divides the quotient's polynomial, which divides the
# characteristic polynomial of the graph.

for n in range(3, 9):
    rep = divisibility_chain(n)
    print(f"n={n}  main eigenvalues={rep.n_main}  cells={rep.p_b.degree}  holds={rep.holds}")
