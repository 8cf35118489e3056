"""
Exact certificates for the eigenvalue -4
========================================

Splitting the edges into board lines puts every square on at most four
lines, so no eigenvalue lies below -4.  The eigenspace of -4 is cut out by
a small integer system, and a translated 4x4 stencil gives an explicit basis.
"""

import numpy as np

from queensgraph.board import build_graph
from queensgraph.cliquepart import minus_m_eigen_system, queens_ecp
from queensgraph.exactlin import rat_rank
from queensgraph.spectra import (
    X4_STENCIL,
    build_F_family,
    certify_n_minus_4_lower_bound,
    dense_spectrum,
)

###############################################################################
# The stencil
# -----------
# Its rows, columns and both diagonals each sum to zero.

print(np.array(X4_STENCIL))

###############################################################################
# Corank of the line system against the stencil count
# ---------------------------------------------------

for n in range(4, 10):
    g = build_graph(n)
    system = minus_m_eigen_system(queens_ecp(g))
    corank = g.order - rat_rank(system)
    F = build_F_family(n)
    print(f"n={n}  rows={len(system)}  corank={corank}  stencils={len(F)}  "
          f"rank={rat_rank(F.vectors)}  float multiplicity={dense_spectrum(g).multiplicity_near(-4)}")

###############################################################################
# The eigenvalue n - 4
# --------------------
# Symmetrized row and column differences give a certified lower bound.

for n in range(3, 10):
    print(f"n={n}  multiplicity of {n - 4} is at least {certify_n_minus_4_lower_bound(n)}")
