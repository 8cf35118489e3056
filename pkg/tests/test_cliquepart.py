import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from queensgraph.board import build_graph
from queensgraph.cliquepart import (
    ECPError,
    content_lower_bound,
    eigen_lower_bound,
    minus_m_eigen_system,
    minus_m_multiplicity,
    queens_ecp,
    singleton_ecp,
    verify_ecp,
)

K4 = [[int(i != j) for j in range(4)] for i in range(4)]


def float_multiplicity(M, value, tol=1e-7):
    vals = np.linalg.eigvalsh(np.asarray(M, dtype=float))
    return int(np.sum(np.abs(vals - value) < tol))


@pytest.mark.parametrize("n", range(2, 11))
def test_queens_ecp_structure(n):
    P = queens_ecp(build_graph(n))
    assert len(P) == 6 * n - 6
    corners = {0, n - 1, n * (n - 1), n * n - 1}
    for v, m in enumerate(P.clique_degree):
        assert m == (3 if v in corners else 4)
    assert P.max_clique_degree == (3 if n == 2 else 4)
    assert sorted(P.edges()) == sorted(build_graph(n).edges())


@pytest.mark.parametrize("n", range(3, 9))
def test_minus4_system_shape(n):
    system = minus_m_eigen_system(queens_ecp(build_graph(n)))
    assert len(system) == 6 * n - 2
    assert all(len(r) == n * n for r in system)


def test_k4_singleton_partition():
    P = singleton_ecp(K4)
    assert len(P) == 6 and set(P.clique_degree) == {3}
    system = minus_m_eigen_system(P)
    # every vertex attains m = 3, so only the six part rows appear
    assert len(system) == 6 and all(len(r) == 4 for r in system)
    assert minus_m_multiplicity(P) == 0
    whole = verify_ecp(K4, [(0, 1, 2, 3)])
    assert whole.max_clique_degree == 1 and minus_m_multiplicity(whole) == 3


def test_verify_ecp_errors():
    with pytest.raises(ECPError, match="not a clique"):
        verify_ecp([[0, 1, 0], [1, 0, 1], [0, 1, 0]], [(0, 1, 2)])
    with pytest.raises(ECPError, match="overlaps"):
        verify_ecp(K4, [(0, 1, 2, 3), (0, 1)])
    with pytest.raises(ECPError, match="not covered"):
        verify_ecp(K4, [(0, 1, 2)])
    with pytest.raises(ValueError):
        queens_ecp(build_graph(1))


def test_ecp_json():
    import json

    doc = json.loads(queens_ecp(build_graph(3)).to_json())
    assert doc["m_G"] == 4 and doc["m_histogram"] == {"3": 4, "4": 5}
    assert min(min(p) for p in doc["parts"]) == 1


@st.composite
def graphs(draw):
    nv = draw(st.integers(2, 8))
    M = [[0] * nv for _ in range(nv)]
    for i in range(nv):
        for j in range(i + 1, nv):
            if draw(st.booleans()):
                M[i][j] = M[j][i] = 1
    return M


@settings(max_examples=60, deadline=None)
@given(graphs())
def test_eigen_bound_and_multiplicity_on_random_graphs(M):
    if not any(map(any, M)):
        return
    P = singleton_ecp(M)
    m = P.max_clique_degree
    lam = np.linalg.eigvalsh(np.asarray(M, dtype=float))[0]
    assert lam >= eigen_lower_bound(P) - 1e-9
    assert minus_m_multiplicity(P) == float_multiplicity(M, -m)


@pytest.mark.parametrize("n", range(2, 9))
def test_queens_minus_m_multiplicity_matches_float(n):
    g = build_graph(n)
    P = queens_ecp(g)
    assert minus_m_multiplicity(P) == float_multiplicity(g.matrix, -P.max_clique_degree)


def test_content_bound():
    g = build_graph(5)
    lam = np.linalg.eigvalsh(g.matrix.astype(float))[0]
    rep = content_lower_bound(lam, [queens_ecp(g), singleton_ecp(g)])
    assert rep.best_ecp_size == 24 and rep.spectral_bound <= 4 + 1e-9
    with pytest.raises(AssertionError):
        content_lower_bound(-5.0, [queens_ecp(g)])


K3 = [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def test_triangle_single_part():
    P = verify_ecp(K3, [(0, 1, 2)])
    assert P.clique_degree == (1, 1, 1) and eigen_lower_bound(P) == -1
    assert abs(np.linalg.eigvalsh(np.array(K3, float))[0] + 1) < 1e-12


def test_small_board_partitions():
    P2 = queens_ecp(build_graph(2))
    assert len(P2) == 6 and all(len(p) == 2 for p in P2.parts) and set(P2.clique_degree) == {3}
    assert eigen_lower_bound(P2) == -3
    P4 = queens_ecp(build_graph(4))
    assert len(P4) == 18 and P4.max_clique_degree == 4
    assert P4.clique_degree[0] == 3 and eigen_lower_bound(P4) == -4
    assert queens_ecp(build_graph(6)).max_clique_degree == 4


def test_content_examples():
    for n in (4, 6):
        g = build_graph(n)
        lam = np.linalg.eigvalsh(g.matrix.astype(float))[0]
        rep = content_lower_bound(lam, [queens_ecp(g)])
        assert rep.spectral_bound <= 4 + 1e-9 and rep.best_ecp_size == 6 * n - 6
    assert content_lower_bound(-1.0, [singleton_ecp(K4)]).best_ecp_size == 6


@pytest.mark.parametrize("n", range(2, 13))
def test_every_edge_in_exactly_one_line(n):
    g = build_graph(n)
    P = queens_ecp(g)
    counts = {}
    for e in P.edges():
        counts[e] = counts.get(e, 0) + 1
    assert set(counts.values()) == {1} and len(counts) == g.size
