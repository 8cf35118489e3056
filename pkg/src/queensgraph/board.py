"""Board geometry and the n-Queens graph.

Squares are addressed by 1-based ``(row, col)`` pairs, rows counted from the
top and columns from the left.  The linear label of a square is
``(row - 1) * n + col``; internally vertices are the 0-based indices
``label - 1``, so vertex ``v`` sits at ``divmod(v, n)`` in 0-based matrix
coordinates.
"""

from __future__ import annotations

import json
import os
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

DEFAULT_MAX_N = 128


def max_n() -> int:
    """Largest board side accepted by :func:`build_graph` (env ``QS_MAX_N``)."""
    raw = os.environ.get("QS_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


@dataclass(frozen=True, order=True)
class BoardCoord:
    row: int
    col: int

    def label(self, n: int) -> int:
        """1-based linear label, left to right and top to bottom."""
        self.check(n)
        return (self.row - 1) * n + self.col

    def index(self, n: int) -> int:
        return self.label(n) - 1

    def check(self, n: int) -> None:
        if not (1 <= self.row <= n and 1 <= self.col <= n):
            raise ValueError(f"square {self.row, self.col} is off the {n}x{n} board")

    @classmethod
    def from_label(cls, label: int, n: int) -> "BoardCoord":
        if not 1 <= label <= n * n:
            raise ValueError(f"label {label} out of range for n={n}")
        r, c = divmod(label - 1, n)
        return cls(r + 1, c + 1)

    @classmethod
    def from_index(cls, v: int, n: int) -> "BoardCoord":
        return cls.from_label(v + 1, n)


def ring(n: int, row: int, col: int) -> int:
    """Index of the peripheral ring holding ``(row, col)``; the border is ring 1."""
    return min(row, col, n + 1 - row, n + 1 - col)


def attacks(a: tuple[int, int], b: tuple[int, int]) -> bool:
    """Queen move relation between two distinct squares."""
    (i, j), (p, q) = a, b
    if (i, j) == (p, q):
        return False
    return i == p or j == q or i + j == p + q or i - j == p - q


@dataclass(frozen=True, eq=False)
class QueensGraph:
    """Immutable adjacency structure of the n-Queens graph.

    ``matrix`` is the dense 0/1 adjacency matrix (uint8), ``neighbors`` the
    sorted neighbor tuples and ``masks`` the same sets as Python-int bitsets
    (bit ``u`` set iff ``u`` is a neighbor), which the search code uses.
    """

    n: int
    matrix: np.ndarray = field(repr=False)
    neighbors: tuple[tuple[int, ...], ...] = field(repr=False)
    masks: tuple[int, ...] = field(repr=False)
    degree: np.ndarray = field(repr=False)

    @property
    def order(self) -> int:
        return self.n * self.n

    @property
    def size(self) -> int:
        return int(self.degree.sum()) // 2

    def coord(self, v: int) -> BoardCoord:
        return BoardCoord.from_index(v, self.n)

    def index(self, row: int, col: int) -> int:
        return BoardCoord(row, col).index(self.n)

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self.matrix[u, v])

    def closed_masks(self) -> tuple[int, ...]:
        """Closed neighborhoods N[v] as bitsets."""
        return tuple(m | (1 << v) for v, m in enumerate(self.masks))

    def int_matrix(self) -> list[list[int]]:
        """Adjacency matrix as nested lists of Python ints."""
        return self.matrix.astype(int).tolist()

    def edges(self):
        """Yield edges ``(u, v)`` with ``u < v`` in 0-based vertex indices."""
        for u, nbrs in enumerate(self.neighbors):
            for v in nbrs:
                if v > u:
                    yield u, v

    def edge_list_csv(self) -> str:
        """Edge list as ``u,v`` lines in 1-based linear labels, ``u < v``."""
        return "".join(f"{u + 1},{v + 1}\n" for u, v in self.edges())

    def summary(self) -> dict:
        d = self.degree
        return {
            "n": self.n,
            "vertices": self.order,
            "edges": self.size,
            "min_degree": int(d.min()) if d.size else 0,
            "max_degree": int(d.max()) if d.size else 0,
            "avg_degree": str(Fraction(int(d.sum()), self.order)),
        }

    def summary_json(self) -> str:
        return json.dumps(self.summary(), indent=2)

    def diameter(self) -> int:
        """Graph diameter by BFS from every vertex (connected graphs only)."""
        best = 0
        for s in range(self.order):
            dist = [-1] * self.order
            dist[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.neighbors[u]:
                    if dist[w] < 0:
                        dist[w] = dist[u] + 1
                        queue.append(w)
            if min(dist) < 0:
                raise ValueError("graph is disconnected")
            best = max(best, max(dist))
        return best


def adjacency_matrix(n: int) -> np.ndarray:
    """Dense 0/1 adjacency matrix of the n-Queens graph."""
    i, j = np.divmod(np.arange(n * n), n)
    same = (
        (i[:, None] == i[None, :])
        | (j[:, None] == j[None, :])
        | ((i + j)[:, None] == (i + j)[None, :])
        | ((i - j)[:, None] == (i - j)[None, :])
    )
    np.fill_diagonal(same, False)
    return same.astype(np.uint8)


def build_graph(n: int) -> QueensGraph:
    """Build the n-Queens graph on the ``n * n`` squares of the board."""
    if not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError(f"board side must be a positive integer, got {n!r}")
    n = int(n)
    if n > max_n():
        raise ValueError(f"n={n} exceeds the dense cap {max_n()} (set QS_MAX_N to raise it)")
    mat = adjacency_matrix(n)
    mat.setflags(write=False)
    neighbors = tuple(tuple(int(u) for u in np.flatnonzero(row)) for row in mat)
    masks = tuple(sum(1 << u for u in nbrs) for nbrs in neighbors)
    degree = mat.sum(axis=1, dtype=np.int64)
    degree.setflags(write=False)
    return QueensGraph(n, mat, neighbors, masks, degree)


def edge_count_formula(n: int) -> int:
    """Number of edges, ``n(n-1)(5n-1)/3``."""
    if n < 1:
        raise ValueError("n must be positive")
    num = n * (n - 1) * (5 * n - 1)
    assert num % 3 == 0
    return num // 3


def average_degree(n: int) -> Fraction:
    if n < 1:
        raise ValueError("n must be positive")
    return Fraction(2 * (n - 1) * (5 * n - 1), 3 * n)


def max_degree_formula(n: int) -> int:
    if n == 1:
        return 0
    return 4 * n - 5 if n % 2 == 0 else 4 * n - 4


def min_degree_formula(n: int) -> int:
    return 3 * (n - 1)


def degree_formula(n: int, coord: BoardCoord) -> int:
    """Degree of a square from its peripheral ring: ``3(n-1) + 2(ring-1)``."""
    coord.check(n)
    return 3 * (n - 1) + 2 * (ring(n, coord.row, coord.col) - 1)


@dataclass(frozen=True)
class PeripheralPartition:
    n: int
    cells: tuple[frozenset[int], ...]

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]


def peripheral_partition(n: int) -> PeripheralPartition:
    """Concentric rings V_1 (border) ... V_floor((n+1)/2) as 0-based vertex sets."""
    if n < 1:
        raise ValueError("n must be positive")
    k = (n + 1) // 2
    cells: list[set[int]] = [set() for _ in range(k)]
    for r in range(1, n + 1):
        for c in range(1, n + 1):
            cells[ring(n, r, c) - 1].add((r - 1) * n + c - 1)
    return PeripheralPartition(n, tuple(frozenset(c) for c in cells))


def peripheral_sizes_formula(n: int) -> list[int]:
    k = (n + 1) // 2
    sizes = [4 * (n - (2 * i - 1)) for i in range(1, k)]
    sizes.append(4 if n % 2 == 0 else 1)
    return sizes


def index_bounds(n: int) -> tuple[Fraction, int]:
    """Average-degree lower and max-degree upper bound on the largest eigenvalue."""
    if n < 2:
        raise ValueError("index bounds need n >= 2")
    return average_degree(n), max_degree_formula(n)
