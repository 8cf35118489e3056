"""Vertex colorings of the Queens graph."""

from __future__ import annotations

from dataclasses import dataclass

from queensgraph.board import QueensGraph
from queensgraph.combinat.search import BudgetExceeded, SearchBudget, max_clique


@dataclass(frozen=True)
class Coloring:
    n: int
    colors: tuple[int, ...]  # colors[v] for 0-based vertex v

    @property
    def k(self) -> int:
        return len(set(self.colors))

    def grid(self) -> list[list[int]]:
        return [list(self.colors[r * self.n : (r + 1) * self.n]) for r in range(self.n)]

    @classmethod
    def from_grid(cls, rows: list[list[int]]) -> "Coloring":
        return cls(len(rows), tuple(c for row in rows for c in row))

    def classes(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for v, c in enumerate(self.colors):
            out.setdefault(c, []).append(v)
        return out


def modular_coloring(n: int) -> Coloring:
    """Color square (i, j), 0-based, with ``(j - 2i) mod n``.

    Proper when n is coprime to 6; use :func:`verify_coloring` otherwise.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return Coloring(n, tuple((j - 2 * i) % n for i in range(n) for j in range(n)))


def verify_coloring(g: QueensGraph, c: Coloring) -> tuple[bool, tuple[int, int] | None]:
    """Properness check; returns ``(ok, first monochromatic edge)``."""
    if len(c.colors) != g.order:
        raise ValueError("coloring does not cover the board")
    for u, v in g.edges():
        if c.colors[u] == c.colors[v]:
            return False, (u, v)
    return True, None


def dsatur_greedy(g: QueensGraph) -> Coloring:
    """Plain DSATUR heuristic coloring."""
    N = g.order
    color = [-1] * N
    seen: list[set[int]] = [set() for _ in range(N)]
    for _ in range(N):
        v = max((u for u in range(N) if color[u] < 0), key=lambda u: (len(seen[u]), g.degree[u], -u))
        c = 0
        while c in seen[v]:
            c += 1
        color[v] = c
        for u in g.neighbors[v]:
            seen[u].add(c)
    return Coloring(g.n, tuple(color))


def _k_coloring(g: QueensGraph, k: int, clique: list[int], budget: SearchBudget) -> list[int] | None:
    """Exact k-coloring search, DSATUR vertex order, clique precolored."""
    N = g.order
    nbrs = g.neighbors
    color = [-1] * N
    cnt = [[0] * k for _ in range(N)]
    sat = [0] * N
    deg = [int(d) for d in g.degree]

    def assign(v: int, c: int) -> None:
        color[v] = c
        for u in nbrs[v]:
            if cnt[u][c] == 0:
                sat[u] += 1
            cnt[u][c] += 1

    def unassign(v: int, c: int) -> None:
        color[v] = -1
        for u in nbrs[v]:
            cnt[u][c] -= 1
            if cnt[u][c] == 0:
                sat[u] -= 1

    if len(clique) > k:
        return None
    for c, v in enumerate(clique):
        assign(v, c)

    def rec(done: int, used: int) -> bool:
        budget.tick()
        if done == N:
            return True
        v = -1
        key = (-1, -1)
        for u in range(N):
            if color[u] < 0 and (sat[u], deg[u]) > key:
                v, key = u, (sat[u], deg[u])
        if sat[v] == k:
            return False
        for c in range(min(used + 1, k)):
            if cnt[v][c] == 0:
                assign(v, c)
                if rec(done + 1, max(used, c + 1)):
                    return True
                unassign(v, c)
        return False

    return color if rec(len(clique), len(clique)) else None


@dataclass(frozen=True)
class ChromaticResult:
    n: int
    lower: int
    upper: int
    coloring: Coloring
    optimal: bool
    nodes: int = 0

    @property
    def value(self) -> int:
        if not self.optimal:
            raise ValueError(f"chromatic number only bracketed in [{self.lower}, {self.upper}]")
        return self.upper


def chromatic_number_exact(g: QueensGraph, budget: SearchBudget | None = None) -> ChromaticResult:
    """Exact chromatic number by increasing k from the clique bound.

    On budget exhaustion the result is a bracket ``[lower, upper]`` with
    ``optimal=False``.
    """
    budget = budget or SearchBudget()
    n = g.n
    omega = max_clique(g, budget)
    clique = sorted(c.index(n) for c in omega.vertices)
    lower = len(clique)
    if n >= 5:
        lower = max(lower, n)
    best = dsatur_greedy(g)
    modular = modular_coloring(n)
    if verify_coloring(g, modular)[0] and modular.k < best.k:
        best = modular
    upper = best.k
    k = lower
    try:
        while k < upper:
            found = _k_coloring(g, k, clique, budget)
            if found is not None:
                best = Coloring(n, tuple(found))
                upper = k
                break
            k += 1
    except BudgetExceeded:
        return ChromaticResult(n, k, upper, best, False, budget.nodes)
    return ChromaticResult(n, upper, upper, best, True, budget.nodes)
