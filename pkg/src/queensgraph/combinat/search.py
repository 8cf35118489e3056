"""Stable sets and cliques by exhaustive search on bitsets."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field

from queensgraph.board import BoardCoord, QueensGraph


class BudgetExceeded(Exception):
    pass


@dataclass
class SearchBudget:
    """Node and wall-clock caps shared by the solvers; ``None`` means unlimited."""

    node_cap: int | None = None
    time_cap: float | None = None  # seconds
    nodes: int = 0
    started: float = field(default_factory=time.perf_counter)

    def tick(self) -> None:
        self.nodes += 1
        if self.node_cap is not None and self.nodes > self.node_cap:
            raise BudgetExceeded
        if self.time_cap is not None and (self.nodes & 1023) == 0:
            if time.perf_counter() - self.started > self.time_cap:
                raise BudgetExceeded

    @property
    def millis(self) -> int:
        return int((time.perf_counter() - self.started) * 1000)


@dataclass(frozen=True)
class VertexSubsetResult:
    kind: str  # "stable", "clique" or "dominating"
    n: int
    vertices: frozenset[BoardCoord]
    value: int
    optimal: bool
    lower: int
    upper: int
    nodes: int = 0
    millis: int = 0
    count: int | None = None  # number of optimal sets, when enumerated

    def labels(self) -> list[int]:
        return sorted(c.label(self.n) for c in self.vertices)

    def to_dict(self) -> dict:
        return {
            "problem": self.kind,
            "n": self.n,
            "value": str(self.value) if self.optimal else None,
            "optimal": self.optimal,
            "lower": str(self.lower),
            "upper": str(self.upper),
            "witness": [str(v) for v in self.labels()],
            "nodes": str(self.nodes),
            "millis": str(self.millis),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def _coords(n: int, verts) -> frozenset[BoardCoord]:
    return frozenset(BoardCoord.from_index(v, n) for v in verts)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


# independent verifiers -------------------------------------------------------


def is_stable(g: QueensGraph, verts) -> bool:
    vs = [c.index(g.n) if isinstance(c, BoardCoord) else c for c in verts]
    return all(not g.adjacent(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :])


def is_clique(g: QueensGraph, verts) -> bool:
    vs = [c.index(g.n) if isinstance(c, BoardCoord) else c for c in verts]
    return all(g.adjacent(a, b) for i, a in enumerate(vs) for b in vs[i + 1 :])


def is_dominating(g: QueensGraph, verts) -> bool:
    vs = {c.index(g.n) if isinstance(c, BoardCoord) else c for c in verts}
    return all(v in vs or any(u in vs for u in g.neighbors[v]) for v in range(g.order))


# stable sets ---------------------------------------------------------------


def max_stable_set(
    g: QueensGraph, budget: SearchBudget | None = None, count_all: bool = False
) -> VertexSubsetResult:
    """Largest set of pairwise non-attacking queens.

    Rows are filled top to bottom; a row may stay empty, so boards without an
    n-queens solution are handled.  With ``count_all`` every maximum set is
    enumerated and counted.
    """
    n = g.n
    budget = budget or SearchBudget()
    best: list[int] = []
    count = 0
    placed: list[int] = []

    def dfs(row: int, cols: int, d1: int, d2: int) -> None:
        nonlocal best, count
        budget.tick()
        k = len(placed)
        if row == n:
            if k > len(best):
                best, count = placed.copy(), 1
            elif k == len(best) and count_all:
                count += 1
            return
        room = k + (n - row)
        if room < len(best) or (room == len(best) and not count_all):
            return
        for c in range(n):
            if not (cols >> c) & 1 and not (d1 >> (row + c)) & 1 and not (d2 >> (row - c + n)) & 1:
                placed.append(row * n + c)
                dfs(row + 1, cols | 1 << c, d1 | 1 << (row + c), d2 | 1 << (row - c + n))
                placed.pop()
        dfs(row + 1, cols, d1, d2)

    optimal = True
    try:
        dfs(0, 0, 0, 0)
    except BudgetExceeded:
        optimal = False
    value = len(best)
    return VertexSubsetResult(
        "stable",
        n,
        _coords(n, best),
        value,
        optimal,
        value,
        value if optimal else n,
        budget.nodes,
        budget.millis,
        count if (count_all and optimal) else None,
    )


# cliques -------------------------------------------------------------------


def _color_sort(candidates: int, masks: tuple[int, ...]) -> tuple[list[int], list[int]]:
    """Greedy sequential coloring; vertices come out by nondecreasing color."""
    order: list[int] = []
    colors: list[int] = []
    uncolored = candidates
    color = 0
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            low = avail & -avail
            v = low.bit_length() - 1
            avail &= ~low & ~masks[v]
            uncolored &= ~low
            order.append(v)
            colors.append(color)
    return order, colors


def max_clique(g: QueensGraph, budget: SearchBudget | None = None) -> VertexSubsetResult:
    """Maximum clique by branch and bound with the greedy-coloring bound."""
    n = g.n
    masks = g.masks
    budget = budget or SearchBudget()
    best: list[int] = []
    current: list[int] = []

    def expand(cand: int) -> None:
        nonlocal best
        budget.tick()
        order, colors = _color_sort(cand, masks)
        for idx in range(len(order) - 1, -1, -1):
            if len(current) + colors[idx] <= len(best):
                return
            v = order[idx]
            current.append(v)
            sub = cand & masks[v]
            if sub:
                expand(sub)
            elif len(current) > len(best):
                best = current.copy()
            current.pop()
            cand &= ~(1 << v)

    optimal = True
    try:
        expand((1 << g.order) - 1)
    except BudgetExceeded:
        optimal = False
    value = len(best)
    return VertexSubsetResult(
        "clique", n, _coords(n, best), value, optimal, value, value if optimal else g.order, budget.nodes, budget.millis
    )
