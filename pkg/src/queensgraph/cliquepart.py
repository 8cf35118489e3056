"""Edge clique partitions and the clique-degree bound on the least eigenvalue.

An edge clique partition (ECP) splits the edge set of a graph into parts
whose vertex sets are cliques.  If every vertex lies in at most ``m`` of
those cliques, no eigenvalue of the graph is below ``-m``; and ``-m`` is an
eigenvalue exactly when some nonzero vector sums to zero on every clique
and vanishes on the vertices covered fewer than ``m`` times.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from queensgraph.board import QueensGraph
from queensgraph.exactlin import rat_rank


class ECPError(ValueError):
    """An edge clique partition failed validation."""


@dataclass(frozen=True)
class EdgeCliquePartition:
    """Parts are stored by the vertex set of their clique."""

    n_vertices: int
    parts: tuple[tuple[int, ...], ...]
    clique_degree: tuple[int, ...]

    @property
    def max_clique_degree(self) -> int:
        return max(self.clique_degree, default=0)

    def __len__(self) -> int:
        return len(self.parts)

    def edges(self):
        for part in self.parts:
            for a in range(len(part)):
                for b in range(a + 1, len(part)):
                    u, v = part[a], part[b]
                    yield (u, v) if u < v else (v, u)

    def to_json(self) -> str:
        """Parts as lists of 1-based labels plus the clique-degree report."""
        hist = Counter(self.clique_degree)
        return json.dumps(
            {
                "parts": [[v + 1 for v in part] for part in self.parts],
                "m_histogram": {str(k): hist[k] for k in sorted(hist)},
                "m_G": self.max_clique_degree,
            }
        )


def _adjacency_sets(graph) -> list[set[int]]:
    """Neighbor sets from a QueensGraph, a 0/1 matrix or a neighbor-list sequence."""
    if isinstance(graph, QueensGraph):
        return [set(nb) for nb in graph.neighbors]
    rows = list(graph)
    if rows and len(rows) == len(rows[0]) and all(x in (0, 1) for r in rows for x in r):
        return [{j for j, x in enumerate(r) if x} for r in rows]
    return [set(nb) for nb in rows]


def verify_ecp(graph, parts: Sequence[Sequence[int]]) -> EdgeCliquePartition:
    """Validate ``parts`` against ``graph`` and compute clique degrees.

    Raises :class:`ECPError` naming the first offending part.
    """
    adj = _adjacency_sets(graph)
    nv = len(adj)
    seen: dict[tuple[int, int], int] = {}
    for idx, part in enumerate(parts):
        if len(set(part)) != len(part) or len(part) < 2:
            raise ECPError(f"part {idx} must list at least two distinct vertices")
        for a in range(len(part)):
            for b in range(a + 1, len(part)):
                u, v = sorted((part[a], part[b]))
                if v not in adj[u]:
                    raise ECPError(f"part {idx} is not a clique: {u} and {v} are not adjacent")
                if (u, v) in seen:
                    raise ECPError(f"part {idx} overlaps part {seen[u, v]} on edge {(u, v)}")
                seen[u, v] = idx
    n_edges = sum(len(s) for s in adj) // 2
    if len(seen) != n_edges:
        missing = next((u, v) for u in range(nv) for v in adj[u] if u < v and (u, v) not in seen)
        raise ECPError(f"edge {missing} is not covered by any part")
    deg = [0] * nv
    for part in parts:
        for v in part:
            deg[v] += 1
    return EdgeCliquePartition(nv, tuple(tuple(p) for p in parts), tuple(deg))


def singleton_ecp(graph) -> EdgeCliquePartition:
    """Every edge its own part; clique degree equals vertex degree."""
    adj = _adjacency_sets(graph)
    parts = [(u, v) for u in range(len(adj)) for v in sorted(adj[u]) if u < v]
    return verify_ecp(graph, parts)


def queens_lines(n: int) -> list[tuple[int, ...]]:
    """Rows, columns, then both diagonal families; lines with one square are dropped."""
    idx = lambda i, j: (i - 1) * n + (j - 1)  # noqa: E731
    lines = []
    for i in range(1, n + 1):
        lines.append(tuple(idx(i, j) for j in range(1, n + 1)))
    for j in range(1, n + 1):
        lines.append(tuple(idx(i, j) for i in range(1, n + 1)))
    for s in range(3, 2 * n):
        lines.append(tuple(idx(i, s - i) for i in range(1, n + 1) if 1 <= s - i <= n))
    for t in range(-(n - 2), n - 1):
        lines.append(tuple(idx(i, i - t) for i in range(1, n + 1) if 1 <= i - t <= n))
    return lines


def queens_ecp(g: QueensGraph) -> EdgeCliquePartition:
    """The ECP of the Queens graph by board lines: ``n + n + (2n-3) + (2n-3)`` parts."""
    if g.n < 2:
        raise ValueError("queens_ecp needs n >= 2")
    return verify_ecp(g, queens_lines(g.n))


def eigen_lower_bound(P: EdgeCliquePartition) -> int:
    return -P.max_clique_degree


def minus_m_eigen_system(P: EdgeCliquePartition) -> list[list[int]]:
    """Coefficient matrix whose kernel is the eigenspace of ``-m_G(P)``.

    One row per part (sum over its clique) followed by one unit row per
    vertex whose clique degree is below the maximum.
    """
    nv = P.n_vertices
    m = P.max_clique_degree
    rows = []
    for part in P.parts:
        row = [0] * nv
        for v in part:
            row[v] = 1
        rows.append(row)
    for v, mv in enumerate(P.clique_degree):
        if mv != m:
            row = [0] * nv
            row[v] = 1
            rows.append(row)
    return rows


def minus_m_multiplicity(P: EdgeCliquePartition) -> int:
    """Exact dimension of the ``-m_G(P)`` eigenspace (0 if not an eigenvalue)."""
    system = minus_m_eigen_system(P)
    return P.n_vertices - rat_rank(system)


@dataclass(frozen=True)
class ContentReport:
    lambda_min: float
    spectral_bound: float
    ecp_sizes: tuple[int, ...]
    max_clique_degrees: tuple[int, ...]

    @property
    def best_ecp_size(self) -> int:
        return min(self.ecp_sizes)


def content_lower_bound(
    lambda_min: float | Fraction, partitions: Sequence[EdgeCliquePartition], tol: float = 1e-9
) -> ContentReport:
    """Check ``-lambda_min <= m_G(P) <= |P|`` for every supplied ECP.

    ``-lambda_min`` is a lower bound on the content (fewest parts of any ECP).
    """
    bound = -float(lambda_min)
    for P in partitions:
        m = P.max_clique_degree
        if bound > m + tol:
            raise AssertionError(f"least eigenvalue {lambda_min} is below -m_G(P) = {-m}")
        if m > len(P):
            raise AssertionError(f"m_G(P) = {m} exceeds |P| = {len(P)}")
    return ContentReport(
        float(lambda_min),
        bound,
        tuple(len(P) for P in partitions),
        tuple(P.max_clique_degree for P in partitions),
    )
