"""Queen domination: exact search, bounds and the 0-1 program."""

from __future__ import annotations

import io
from dataclasses import dataclass

import numpy as np

from queensgraph.board import QueensGraph
from queensgraph.combinat.search import BudgetExceeded, SearchBudget, VertexSubsetResult, _coords


def domination_bounds(n: int) -> tuple[int, int]:
    """Lower ``ceil((n-1)/2)`` (raised to ``2k+1`` when ``n = 4k+1``) and upper ``2p+q`` for ``n = 3p+q``."""
    if n < 1:
        raise ValueError("n must be positive")
    lower = -(-(n - 1) // 2)
    if n % 4 == 1:
        lower = max(lower, 2 * ((n - 1) // 4) + 1)
    p, q = divmod(n, 3)
    return lower, 2 * p + q


@dataclass(frozen=True)
class BlpModel:
    """``max sum(x)`` subject to ``(A + I) x <= d``, ``x`` binary.

    A feasible ``x`` leaves at least one zero in every closed neighborhood,
    so its zeros form a dominating set; at the optimum their count is the
    domination number.
    """

    n: int
    constraints: np.ndarray  # A + I
    rhs: np.ndarray  # vertex degrees

    @property
    def n_vars(self) -> int:
        return self.constraints.shape[1]

    def objective(self, x) -> int:
        return int(np.sum(x))

    def is_feasible(self, x) -> bool:
        x = np.asarray(x, dtype=np.int64)
        if not np.all((x == 0) | (x == 1)):
            return False
        return bool(np.all(self.constraints.astype(np.int64) @ x <= self.rhs))

    def decode(self, x) -> list[int]:
        """Vertices with ``x_v = 0``."""
        return [int(v) for v in np.flatnonzero(np.asarray(x) == 0)]

    def encode(self, dominating) -> np.ndarray:
        x = np.ones(self.n_vars, dtype=np.int64)
        x[list(dominating)] = 0
        return x


def build_blp(g: QueensGraph) -> BlpModel:
    cons = g.matrix.astype(np.int64) + np.eye(g.order, dtype=np.int64)
    return BlpModel(g.n, cons, np.asarray(g.degree, dtype=np.int64).copy())


def _has_dominating_set(g: QueensGraph, k: int, budget: SearchBudget) -> list[int] | None:
    """Search for a dominating set of size ``k``.

    Branches on the dominators of one uncovered square at a time (border
    squares first, they have the fewest).  At the root the uncovered square
    is the top-left corner; since transposing the board fixes that corner,
    only dominators on or above the main diagonal are tried there.
    """
    n, N = g.n, g.order
    closed = g.closed_masks()
    order = sorted(range(N), key=lambda v: (int(g.degree[v]), v))
    max_cover = max(m.bit_count() for m in closed)
    chosen: list[int] = []

    def rec(uncovered: int, left: int, root: bool) -> bool:
        budget.tick()
        if not uncovered:
            return True
        if left == 0 or uncovered.bit_count() > left * max_cover:
            return False
        u = next(v for v in order if (uncovered >> v) & 1)
        cands = [w for w in range(N) if (closed[u] >> w) & 1]
        if root:
            cands = [w for w in cands if w // n <= w % n]
        # most new coverage first
        cands.sort(key=lambda w: -(closed[w] & uncovered).bit_count())
        if left == 1:
            for w in cands:
                if closed[w] & uncovered == uncovered:
                    chosen.append(w)
                    return True
            return False
        for w in cands:
            chosen.append(w)
            if rec(uncovered & ~closed[w], left - 1, False):
                return True
            chosen.pop()
        return False

    full = (1 << N) - 1
    # the corner is the root branching square
    assert order[0] == 0
    return chosen if rec(full, k, True) else None


def domination_number(
    g: QueensGraph, budget: SearchBudget | None = None, start: int | None = None
) -> VertexSubsetResult:
    """Exact domination number by trying k = start, start+1, ...

    ``start`` defaults to the proven lower bound of :func:`domination_bounds`.
    If the budget runs out the result is a bracket ``[lower, upper]`` with
    ``optimal=False``; ``upper`` is the best witness found or the closed-form
    upper bound.
    """
    budget = budget or SearchBudget()
    lower, upper = domination_bounds(g.n)
    k = max(1, lower if start is None else start)
    try:
        while True:
            found = _has_dominating_set(g, k, budget)
            if found is not None:
                return VertexSubsetResult(
                    "dominating", g.n, _coords(g.n, found), k, True, k, k, budget.nodes, budget.millis
                )
            k += 1
    except BudgetExceeded:
        return VertexSubsetResult(
            "dominating", g.n, frozenset(), upper, False, max(k, lower), upper, budget.nodes, budget.millis
        )


@dataclass(frozen=True)
class MonotonicityReport:
    checked_pairs: int
    decreases: tuple[int, ...]  # n with gamma(n) > gamma(n+1)


def monotonicity_check(gamma: dict[int, int]) -> MonotonicityReport:
    """Assert ``gamma(n+1) <= gamma(n) + 1`` on consecutive entries.

    Whether ``gamma(n) <= gamma(n+1)`` holds is reported, not asserted.
    """
    pairs = 0
    violations = []
    for n in sorted(gamma):
        if n + 1 in gamma:
            pairs += 1
            if gamma[n + 1] > gamma[n] + 1:
                raise AssertionError(f"gamma({n + 1}) = {gamma[n + 1]} exceeds gamma({n}) + 1")
            if gamma[n] > gamma[n + 1]:
                violations.append(n)
    return MonotonicityReport(pairs, tuple(violations))


def gamma_table_csv(results: list[VertexSubsetResult]) -> str:
    """Columns ``i,j,n,value,lower,upper,optimal`` with ``n = 9i + j``."""
    buf = io.StringIO()
    buf.write("i,j,n,value,lower,upper,optimal\n")
    for r in sorted(results, key=lambda r: r.n):
        i, j = divmod(r.n, 9)
        value = r.value if r.optimal else ""
        buf.write(f"{i},{j},{r.n},{value},{r.lower},{r.upper},{str(r.optimal).lower()}\n")
    return buf.getvalue()
