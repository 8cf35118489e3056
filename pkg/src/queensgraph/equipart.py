"""Equitable partition of the Queens graph by folding the board.

Fold each square into the top-left quadrant, ``r' = min(i, n+1-i)`` and
``c' = min(j, n+1-j)``, then onto the triangle above the diagonal,
``a = min(r', c')`` and ``b = max(r', c')``.  Square (i, j) gets cell
``b(b-1)/2 + a - 1``.  The cells are the orbits of the board under its
eight rotations and reflections, so each holds 1, 4 or 8 squares.
"""

from __future__ import annotations

import io
import json
import random
from dataclasses import dataclass

import numpy as np

from queensgraph.board import QueensGraph, build_graph
from queensgraph.exactlin import IntPoly, char_poly, int_matmul, main_poly, poly_divides, poly_quotient
from queensgraph.spectra import spectrum_of


def cell_count(n: int) -> int:
    m = -(-n // 2)
    return (m + 1) * m // 2


@dataclass(frozen=True)
class EquitablePartition:
    n: int
    cell_of: tuple[int, ...]  # per 0-based vertex

    @property
    def k(self) -> int:
        return max(self.cell_of) + 1

    @property
    def cells(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.k)]
        for v, c in enumerate(self.cell_of):
            out[c].append(v)
        return out

    def cell_sizes(self) -> list[int]:
        return [len(c) for c in self.cells]

    def grid(self) -> list[list[int]]:
        n = self.n
        return [list(self.cell_of[r * n : (r + 1) * n]) for r in range(n)]

    def characteristic_matrix(self) -> list[list[int]]:
        """0/1 matrix with one column per cell."""
        return [[int(c == j) for j in range(self.k)] for c in self.cell_of]

    def to_json(self) -> str:
        return json.dumps(
            {"n": self.n, "K": self.k, "cell_of": list(self.cell_of), "cell_sizes": self.cell_sizes()}
        )


def fold_label(n: int, i: int, j: int) -> int:
    r = min(i, n + 1 - i)
    c = min(j, n + 1 - j)
    a, b = min(r, c), max(r, c)
    return b * (b - 1) // 2 + a - 1


def folded_partition(n: int) -> EquitablePartition:
    if n < 3:
        raise ValueError("the folded partition is defined for n >= 3")
    return EquitablePartition(n, tuple(fold_label(n, i, j) for i in range(1, n + 1) for j in range(1, n + 1)))


algorithm1_partition = folded_partition


def trivial_partition(n_vertices: int, n: int = 0) -> EquitablePartition:
    return EquitablePartition(n, tuple(range(n_vertices)))


def random_partition(n_vertices: int, k: int, rng: random.Random, n: int = 0) -> EquitablePartition:
    """Random k-cell split with every cell non-empty."""
    labels = list(range(k)) + [rng.randrange(k) for _ in range(n_vertices - k)]
    rng.shuffle(labels)
    return EquitablePartition(n, tuple(labels))


def _neighbor_counts(g: QueensGraph, pi: EquitablePartition) -> np.ndarray:
    """counts[v, j] = number of neighbors of v in cell j."""
    onehot = np.zeros((g.order, pi.k), dtype=np.int64)
    onehot[np.arange(g.order), pi.cell_of] = 1
    return g.matrix.astype(np.int64) @ onehot


def verify_equitable(g: QueensGraph, pi: EquitablePartition) -> tuple[bool, tuple[int, int, int] | None]:
    """Returns ``(ok, (u, v, j))`` where u, v share a cell but differ in neighbors in cell j."""
    if len(pi.cell_of) != g.order:
        raise ValueError("partition does not cover the vertex set")
    counts = _neighbor_counts(g, pi)
    for cell in pi.cells:
        rep = cell[0]
        for v in cell[1:]:
            diff = np.flatnonzero(counts[v] != counts[rep])
            if diff.size:
                return False, (rep, v, int(diff[0]))
    return True, None


def divisor_matrix(g: QueensGraph, pi: EquitablePartition) -> list[list[int]]:
    """Quotient matrix ``B``: ``B[i][j]`` neighbors in cell j of any vertex of cell i."""
    ok, witness = verify_equitable(g, pi)
    if not ok:
        raise ValueError(f"partition is not equitable: {witness}")
    counts = _neighbor_counts(g, pi)
    return [[int(x) for x in counts[cell[0]]] for cell in pi.cells]


def divisor_matrix_csv(B: list[list[int]]) -> str:
    buf = io.StringIO()
    for row in B:
        buf.write(",".join(str(x) for x in row) + "\n")
    return buf.getvalue()


def verify_ac_equals_cb(A, C, B) -> bool:
    return int_matmul(A, C) == int_matmul(C, B)


@dataclass(frozen=True)
class DivisibilityReport:
    n: int
    char_a: IntPoly
    p_b: IntPoly
    main: IntPoly
    main_divides_pb: bool
    pb_divides_char: bool

    @property
    def n_main(self) -> int:
        return self.main.degree

    @property
    def holds(self) -> bool:
        return self.main_divides_pb and self.pb_divides_char

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "char_A": [str(c) for c in self.char_a.coeffs],
                "p_B": [str(c) for c in self.p_b.coeffs],
                "main_poly": [str(c) for c in self.main.coeffs],
                "main_divides_pB": self.main_divides_pb,
                "pB_divides_charA": self.pb_divides_char,
                "n_main": self.n_main,
            },
            indent=2,
        )


def divisibility_chain(n: int, partition: EquitablePartition | None = None) -> DivisibilityReport:
    """``main_poly(A) | char_poly(B) | char_poly(A)``, checked by exact division.

    Below n = 3 the folded partition is undefined and the singleton
    partition is used, so ``B`` is the adjacency matrix itself.
    """
    g = build_graph(n)
    if partition is None:
        partition = folded_partition(n) if n >= 3 else trivial_partition(g.order, n)
    pi = partition
    A = g.int_matrix()
    B = divisor_matrix(g, pi)
    char_a = char_poly(A)
    p_b = char_poly(B)
    m = main_poly(A)
    rep = DivisibilityReport(n, char_a, p_b, m, poly_divides(m, p_b), poly_divides(p_b, char_a))
    if rep.holds:
        # integer cofactors, for the record
        poly_quotient(char_a, p_b)
        poly_quotient(p_b, m)
    return rep


def largest_eig_agreement(g: QueensGraph, B, tol: float = 1e-8) -> tuple[float, float]:
    """Largest eigenvalue of the graph and of ``B``; raises if they differ by more than ``tol``."""
    mu_a = float(np.linalg.eigvalsh(g.matrix.astype(np.float64))[-1])
    mu_b = float(spectrum_of(np.array(B))[-1])
    if abs(mu_a - mu_b) > tol:
        raise AssertionError(f"largest eigenvalues differ: {mu_a} vs {mu_b}")
    return mu_a, mu_b
