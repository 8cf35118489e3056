import json
import random

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from queensgraph.board import build_graph
from queensgraph.equipart import (
    EquitablePartition,
    folded_partition,
    cell_count,
    divisibility_chain,
    divisor_matrix,
    divisor_matrix_csv,
    largest_eig_agreement,
    random_partition,
    trivial_partition,
    verify_ac_equals_cb,
    verify_equitable,
)
from queensgraph.exactlin import IntPoly, char_poly, main_poly

GRID6 = [
    [0, 1, 3, 3, 1, 0],
    [1, 2, 4, 4, 2, 1],
    [3, 4, 5, 5, 4, 3],
    [3, 4, 5, 5, 4, 3],
    [1, 2, 4, 4, 2, 1],
    [0, 1, 3, 3, 1, 0],
]
B6 = [
    [3, 4, 2, 4, 0, 2],
    [2, 4, 2, 2, 4, 1],
    [2, 4, 3, 2, 4, 2],
    [2, 2, 1, 4, 4, 2],
    [0, 4, 2, 4, 4, 3],
    [2, 2, 2, 4, 6, 3],
]
PB6 = IntPoly.from_descending([1, -21, 73, 109, -686, 580, -8])


def symmetry_orbits(n):
    """Orbit partition of the board under its eight rotations and reflections."""
    label = {}
    for i in range(n):
        for j in range(n):
            images = []
            for a, b in [(i, j), (j, i)]:
                for x in (a, n - 1 - a):
                    for y in (b, n - 1 - b):
                        images.append((x, y))
            label[i, j] = min(images)
    return {frozenset(v for v in range(n * n) if label[divmod(v, n)] == key) for key in set(label.values())}


def test_six_by_six_labels():
    assert folded_partition(6).grid() == GRID6


@pytest.mark.parametrize("n", range(3, 21))
def test_partition_is_equitable_with_expected_cell_count(n):
    pi = folded_partition(n)
    assert pi.k == cell_count(n) == (-(-n // 2) + 1) * -(-n // 2) // 2
    ok, witness = verify_equitable(build_graph(n), pi)
    assert ok, witness
    assert set(pi.cell_sizes()) <= {1, 4, 8}


@pytest.mark.parametrize("n", range(3, 12))
def test_cells_are_symmetry_orbits(n):
    assert {frozenset(c) for c in folded_partition(n).cells} == symmetry_orbits(n)


@pytest.mark.parametrize("n", range(3, 13))
def test_ac_equals_cb(n):
    g = build_graph(n)
    pi = folded_partition(n)
    assert verify_ac_equals_cb(g.int_matrix(), pi.characteristic_matrix(), divisor_matrix(g, pi))


def test_six_by_six_divisor_matrix():
    g = build_graph(6)
    B = divisor_matrix(g, folded_partition(6))
    assert B == B6
    assert char_poly(B) == PB6
    assert main_poly(g.int_matrix()) == PB6
    eig = sorted(np.linalg.eigvals(np.array(B, dtype=float)).real, reverse=True)
    assert np.allclose(eig, [16.24, 3.63, 2.85, 1.17, 0.01, -2.91], atol=5e-3)
    assert divisor_matrix_csv(B).splitlines()[0] == "3,4,2,4,0,2"


@pytest.mark.parametrize("n", range(3, 9))
def test_divisibility_chain(n):
    rep = divisibility_chain(n)
    assert rep.holds
    assert rep.n_main <= rep.p_b.degree <= rep.char_a.degree == n * n
    doc = json.loads(rep.to_json())
    assert doc["p_B"][-1] == "1" and doc["n_main"] == rep.n_main


@pytest.mark.parametrize("n", range(3, 16))
def test_largest_eigenvalue_is_shared(n):
    g = build_graph(n)
    B = divisor_matrix(g, folded_partition(n))
    mu_a, mu_b = largest_eig_agreement(g, B)
    assert abs(mu_a - mu_b) < 1e-8


def test_trivial_partition_gives_adjacency_matrix():
    g = build_graph(4)
    pi = trivial_partition(16, 4)
    assert verify_equitable(g, pi)[0]
    assert divisor_matrix(g, pi) == g.int_matrix()


def test_non_equitable_partition_is_rejected():
    g = build_graph(4)
    pi = EquitablePartition(4, tuple([0] * 15 + [1]))
    ok, witness = verify_equitable(g, pi)
    assert not ok and witness is not None
    with pytest.raises(ValueError):
        divisor_matrix(g, pi)
    with pytest.raises(ValueError):
        folded_partition(2)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 7), st.integers(0, 10**6))
def test_random_partitions_rarely_equitable_but_check_is_consistent(n, seed):
    g = build_graph(n)
    pi = random_partition(n * n, 3, random.Random(seed), n)
    ok, witness = verify_equitable(g, pi)
    counts = g.matrix.astype(int) @ np.eye(3, dtype=int)[list(pi.cell_of)]
    expected = all(len({tuple(counts[v]) for v in cell}) == 1 for cell in pi.cells)
    assert ok == expected
    if not ok:
        u, v, j = witness
        assert pi.cell_of[u] == pi.cell_of[v] and counts[u][j] != counts[v][j]


def test_contract_name_is_an_alias():
    from queensgraph.equipart import algorithm1_partition

    assert algorithm1_partition(7) == folded_partition(7)


def test_partition_json():
    doc = json.loads(folded_partition(5).to_json())
    assert doc["K"] == 6 and sum(doc["cell_sizes"]) == 25 and len(doc["cell_of"]) == 25


def test_two_by_two_uses_singleton_partition():
    rep = divisibility_chain(2)
    assert rep.holds
    assert rep.main == IntPoly.from_descending([1, -3])
    assert rep.char_a == IntPoly.from_roots([3, -1, -1, -1])
    g = build_graph(2)
    mu_a, mu_b = largest_eig_agreement(g, divisor_matrix(g, trivial_partition(4, 2)))
    assert abs(mu_a - 3) < 1e-12 and abs(mu_b - 3) < 1e-12


def test_four_by_four_perron_agreement():
    assert divisibility_chain(4).holds
    g = build_graph(4)
    largest_eig_agreement(g, divisor_matrix(g, folded_partition(4)))


def test_fold_examples():
    pi6 = folded_partition(6)
    assert pi6.grid()[2][1] == 4  # square (3, 2)
    pi3 = folded_partition(3)
    assert pi3.grid() == [[0, 1, 0], [1, 2, 1], [0, 1, 0]]
    assert pi3.cell_sizes() == [4, 4, 1]
    g3 = build_graph(3)
    B3 = divisor_matrix(g3, pi3)
    assert len(B3) == 3 and verify_ac_equals_cb(g3.int_matrix(), pi3.characteristic_matrix(), B3)


def test_random_two_cell_split_of_four_board_fails():
    rng = random.Random(1)
    g = build_graph(4)
    while True:
        pi = random_partition(16, 2, rng, 4)
        ok, witness = verify_equitable(g, pi)
        if not ok:
            break
    assert witness is not None


def test_corrupted_divisor_matrix_breaks_ac_cb():
    g = build_graph(6)
    pi = folded_partition(6)
    B = [row[:] for row in divisor_matrix(g, pi)]
    B[0][0] += 1
    assert not verify_ac_equals_cb(g.int_matrix(), pi.characteristic_matrix(), B)
    C = trivial_partition(16, 4).characteristic_matrix()
    A = build_graph(4).int_matrix()
    assert verify_ac_equals_cb(A, C, A)


def test_five_board_agreement():
    g = build_graph(5)
    mu_a, mu_b = largest_eig_agreement(g, divisor_matrix(g, folded_partition(5)), 1e-8)
    assert abs(mu_a - mu_b) <= 1e-8
    assert abs(largest_eig_agreement(build_graph(6), B6)[0] - 16.24) < 5e-3
