import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from queensgraph.board import build_graph
from queensgraph.exactlin import (
    IntPoly,
    char_poly,
    int_matmul,
    int_matvec,
    integer_roots,
    main_poly,
    nullspace,
    poly_divides,
    poly_quotient,
    rat_rank,
    root_bound,
    rref,
    solve_in_span,
)

X = sympy.Symbol("x")
small_ints = st.integers(-6, 6)


def sympy_charpoly(M) -> IntPoly:
    coeffs = sympy.Matrix(M).charpoly(X).all_coeffs()
    return IntPoly.from_descending(int(c) for c in coeffs)


def matrices(max_dim=6):
    return st.integers(1, max_dim).flatmap(
        lambda d: st.lists(st.lists(small_ints, min_size=d, max_size=d), min_size=d, max_size=d)
    )


# polynomials ---------------------------------------------------------------


def test_intpoly_basics():
    p = IntPoly.from_descending([1, -6, 11, -6])
    assert p == IntPoly.from_roots([1, 2, 3])
    assert p.degree == 3 and p.is_monic() and p(2) == 0
    assert str(IntPoly.from_descending([1, 0, -6, -8, -3])) == "x^4 - 6*x^2 - 8*x - 3"
    assert IntPoly([0, 0]).is_zero() and IntPoly([]).degree == -1
    assert IntPoly.from_json(p.to_json()) == p


@given(st.lists(small_ints, max_size=6), st.lists(small_ints, max_size=6))
def test_intpoly_ring_laws(a, b):
    p, q = IntPoly(a), IntPoly(b)
    assert p * q == q * p
    assert (p + q) - q == p
    sp, sq = sympy.Poly(list(reversed(a)) or [0], X), sympy.Poly(list(reversed(b)) or [0], X)
    assert IntPoly(reversed([int(c) for c in (sp * sq).all_coeffs()])) == p * q


@given(st.lists(small_ints, min_size=1, max_size=5), st.lists(small_ints, min_size=1, max_size=4))
def test_division_round_trip(a, b):
    d = IntPoly(b + [1])
    p = IntPoly(a) * d
    assert poly_divides(d, p)
    assert poly_quotient(p, d) == IntPoly(a)


def test_quotient_rejects_inexact():
    with pytest.raises(ArithmeticError):
        poly_quotient(IntPoly.from_descending([1, 0, 1]), IntPoly.from_descending([1, -1]))


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=6), st.lists(small_ints, max_size=3))
def test_integer_roots_recovers_planted_roots(roots, extra):
    # extra factor x^2 + x + c with c > 1/4 has no real roots
    p = IntPoly.from_roots(roots) * IntPoly([abs(extra[0]) + 1 if extra else 1, 1, 1])
    found = dict(integer_roots(p))
    for r in set(roots):
        assert found[r] == roots.count(r)
    assert set(found) == set(roots)
    assert all(abs(r) <= root_bound(p) for r in roots)


def test_integer_roots_sorted_descending():
    assert integer_roots(IntPoly.from_roots([-1, 3, -1, 0, 3, 3])) == [(3, 3), (0, 1), (-1, 2)]


# rank, kernel, solve -------------------------------------------------------


@settings(max_examples=60)
@given(st.integers(1, 6).flatmap(lambda c: st.lists(st.lists(small_ints, min_size=c, max_size=c), min_size=1, max_size=7)))
def test_rank_and_nullspace_against_sympy(M):
    S = sympy.Matrix(M)
    assert rat_rank(M) == S.rank()
    ker = nullspace(M)
    assert len(ker) == S.cols - S.rank()
    for v in ker:
        assert int_matvec(M, v) == [0] * len(M)
    red, pivots = rref(M)
    assert len(pivots) == S.rank()


def test_rank_of_queens_graph_matches_sympy():
    A = build_graph(5).int_matrix()
    assert rat_rank(A) == sympy.Matrix(A).rank()


def test_solve_in_span():
    cols = [[1, 0, 1], [0, 1, 1]]
    assert solve_in_span(cols, [2, 3, 5]) == [Fraction(2), Fraction(3)]
    assert solve_in_span(cols, [1, 1, 0]) is None


def test_matvec_shape_check():
    with pytest.raises(ValueError):
        int_matvec([[1, 2]], [1, 2, 3])
    assert int_matmul([[1, 2], [3, 4]], [[0, 1], [1, 0]]) == [[2, 1], [4, 3]]


# characteristic polynomial -------------------------------------------------


@settings(max_examples=40, deadline=None)
@given(matrices())
def test_char_poly_against_sympy(M):
    expected = sympy_charpoly(M)
    assert char_poly(M, "bigint") == expected
    assert char_poly(M, "modular") == expected


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_char_poly_queens_against_sympy(n):
    A = build_graph(n).int_matrix()
    expected = sympy_charpoly(A)
    assert char_poly(A) == expected
    assert char_poly(A, "modular") == expected


def test_char_poly_q2_and_q3():
    assert char_poly(build_graph(2).int_matrix()) == IntPoly.from_descending([1, 0, -6, -8, -3])
    p3 = char_poly(build_graph(3).int_matrix())
    # (x^2 - 5x - 8)(x - 1)(x + 1)^2 (x^2 + 2x - 1)^2
    expected = (
        IntPoly.from_descending([1, -5, -8])
        * IntPoly.from_roots([1, -1, -1])
        * IntPoly.from_descending([1, 2, -1]) ** 2
    )
    assert p3 == expected


def test_modular_path_on_larger_matrix():
    rng = random.Random(7)
    d = 45
    M = [[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)]
    sym = [[M[i][j] + M[j][i] for j in range(d)] for i in range(d)]
    p = char_poly(sym)  # auto selects the modular path above 40
    assert p == char_poly(sym, "bigint")


def test_char_poly_rejects_non_square():
    with pytest.raises(ValueError):
        char_poly([[1, 2, 3], [4, 5, 6]])


# main polynomial -----------------------------------------------------------


def test_main_poly_regular_graph_is_linear():
    # the 5-cycle is 2-regular: j is an eigenvector
    C5 = [[int(abs(i - j) in (1, 4)) for j in range(5)] for i in range(5)]
    assert main_poly(C5) == IntPoly.from_descending([1, -2])


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_main_poly_divides_char_poly(n):
    A = build_graph(n).int_matrix()
    m = main_poly(A)
    assert m.is_monic()
    assert poly_divides(m, char_poly(A))


def test_main_poly_zero_walk():
    assert main_poly([[1, 0], [0, 1]], [0, 0]) == IntPoly([1])


def test_small_examples():
    assert rat_rank([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == 3
    assert rat_rank([[1] * 4] * 4) == 1
    assert char_poly([[0, 0], [0, 0]]) == IntPoly.from_descending([1, 0, 0])
    assert main_poly([[3, 0], [0, 3]]) == IntPoly.from_descending([1, -3])
    assert main_poly(build_graph(2).int_matrix()) == IntPoly.from_descending([1, -3])
    assert poly_divides(IntPoly.from_roots([1]), IntPoly.from_descending([1, 0, -1]))
    assert integer_roots(IntPoly.from_descending([1, 0, -1])) == [(1, 1), (-1, 1)]
    assert integer_roots(char_poly(build_graph(2).int_matrix())) == [(3, 1), (-1, 3)]
    roots4 = dict(integer_roots(char_poly(build_graph(4).int_matrix())))
    assert roots4[-4] == 1 and 0 in roots4
    assert int_matvec([[1, 0], [0, 1]], [5, -2]) == [5, -2]


def test_minus_four_divides_five_board_polynomial():
    assert poly_divides(IntPoly.from_roots([-4]), char_poly(build_graph(5).int_matrix()))


def test_five_board_line_system_rank():
    from queensgraph.cliquepart import minus_m_eigen_system, queens_ecp

    assert rat_rank(minus_m_eigen_system(queens_ecp(build_graph(5)))) == 21
