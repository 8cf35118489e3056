"""
The Queens graph and its degrees
================================

Two squares are adjacent when a queen on one attacks the other.  This
script builds the graph for a few board sizes and compares the counts
with their closed forms.
"""

import numpy as np

from queensgraph.board import (
    build_graph,
    edge_count_formula,
    index_bounds,
    peripheral_partition,
)

###############################################################################
# Size of the graph
# -----------------
# Each row, column and diagonal contributes all pairs of its squares.

for n in (2, 4, 8, 12):
    g = build_graph(n)
    print(f"n={n:2d}  vertices={g.order:4d}  edges={g.size:6d}  formula={edge_count_formula(n)}")

###############################################################################
# Degrees grow toward the centre
# ------------------------------
# A square's degree depends only on which concentric ring it sits in.

g = build_graph(7)
print(g.degree.reshape(7, 7))
print("ring sizes:", peripheral_partition(7).sizes())

###############################################################################
# Bracketing the largest eigenvalue
# ---------------------------------
# The average degree is a lower bound and the maximum degree an upper bound.

for n in (4, 7, 10):
    lo, hi = index_bounds(n)
    mu = np.linalg.eigvalsh(build_graph(n).matrix.astype(float))[-1]
    print(f"n={n:2d}  {float(lo):7.3f} <= {mu:7.3f} <= {hi}")
