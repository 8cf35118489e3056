"""Exact small-board solvers: stable sets, cliques, colorings, domination."""

from queensgraph.combinat.coloring import (
    ChromaticResult,
    Coloring,
    chromatic_number_exact,
    modular_coloring,
    verify_coloring,
)
from queensgraph.combinat.domination import (
    BlpModel,
    build_blp,
    domination_bounds,
    domination_number,
    gamma_table_csv,
    monotonicity_check,
)
from queensgraph.combinat.search import (
    SearchBudget,
    VertexSubsetResult,
    is_clique,
    is_dominating,
    is_stable,
    max_clique,
    max_stable_set,
)

__all__ = [
    "BlpModel",
    "ChromaticResult",
    "Coloring",
    "SearchBudget",
    "VertexSubsetResult",
    "build_blp",
    "chromatic_number_exact",
    "domination_bounds",
    "domination_number",
    "gamma_table_csv",
    "is_clique",
    "is_dominating",
    "is_stable",
    "max_clique",
    "max_stable_set",
    "modular_coloring",
    "monotonicity_check",
    "verify_coloring",
]
