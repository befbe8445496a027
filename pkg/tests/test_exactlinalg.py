from fractions import Fraction
from itertools import permutations

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cosymp.exactlinalg import (
    DimensionMismatchError,
    Matrix,
    Subspace,
    char_poly,
    determinant,
    eigen1_filtration,
    exterior_power,
    image_basis,
    jordan_blocks_from_dims,
    kernel_basis,
    matrix_log_unipotent,
    poly_eval_matrix,
    rref,
    solve,
    to_fraction,
)

entries = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def square(n):
    return st.lists(st.lists(entries, min_size=n, max_size=n), min_size=n, max_size=n).map(Matrix)


def rect(r, c):
    return st.lists(st.lists(entries, min_size=c, max_size=c), min_size=r, max_size=r).map(Matrix)


def leibniz_det(rows):
    n = len(rows)
    total = Fraction(0)
    for p in permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        term = Fraction((-1) ** inv)
        for i in range(n):
            term *= rows[i][p[i]]
        total += term
    return total


def to_sympy(m):
    return sympy.Matrix([[sympy.Rational(x.numerator, x.denominator) for x in r] for r in m.rows])


def test_to_fraction_rejects_floats():
    assert to_fraction("3/4") == Fraction(3, 4)
    with pytest.raises((TypeError, ValueError)):
        to_fraction(0.5)


def test_shape_mismatch():
    with pytest.raises(DimensionMismatchError):
        Matrix([[1, 2]]) @ Matrix([[1, 2]])


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 4).flatmap(square))
def test_det_matches_leibniz(m):
    assert m.det() == leibniz_det(m.rows) == determinant(m)


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_char_poly_matches_sympy(m):
    x = sympy.symbols("x")
    expected = [Fraction(str(c)) for c in to_sympy(m).charpoly(x).all_coeffs()]
    assert char_poly(m) == expected


@settings(max_examples=40, deadline=None)
@given(st.integers(1, 5).flatmap(square))
def test_cayley_hamilton(m):
    assert poly_eval_matrix(char_poly(m), m).is_zero()


@settings(max_examples=40, deadline=None)
@given(st.tuples(st.integers(1, 4), st.integers(1, 5)).flatmap(lambda rc: rect(*rc)))
def test_rank_nullity_against_sympy(m):
    k = kernel_basis(m)
    assert m.rank() == to_sympy(m).rank()
    assert k.dim + m.rank() == m.ncols
    for v in k.basis:
        assert all(c == 0 for c in m.apply(v))
    assert image_basis(m).dim == m.rank()


@settings(max_examples=40, deadline=None)
@given(st.tuples(st.integers(1, 4), st.integers(1, 4)).flatmap(lambda rc: rect(*rc)),
       st.lists(entries, min_size=4, max_size=4))
def test_solve_on_image(m, x):
    x = tuple(x[: m.ncols])
    b = m.apply(x)
    sol = solve(m, b)
    assert sol is not None and m.apply(sol) == b


def test_solve_inconsistent():
    assert solve(Matrix([[1, 0], [0, 0]]), (0, 1)) is None


def test_rref_pivots():
    r, piv = rref(Matrix([[0, 2, 4], [1, 1, 1]]))
    assert piv == (0, 1)
    assert r.rows[0] == (1, 0, -1)


def test_subspace_canonical_and_intersection():
    a = Subspace.span(3, [(1, 1, 0), (0, 1, 1)])
    b = Subspace.span(3, [(1, 2, 1), (1, 0, -1)])
    assert a == b
    c = Subspace.span(3, [(1, 0, 0), (0, 0, 1)])
    meet = a.intersection(c)
    assert meet.dim == 1 and meet.contains((1, 0, -1))
    assert (a + c).dim == 3


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4).flatmap(square), st.integers(0, 4))
def test_exterior_power_minors_against_sympy(m, k):
    k = min(k, m.nrows)
    w = exterior_power(m, k)
    sm = to_sympy(m)
    from itertools import combinations

    subsets = list(combinations(range(m.nrows), k)) if k else [()]
    for a, I in enumerate(subsets):
        for b, J in enumerate(subsets):
            expected = sm.extract(list(I), list(J)).det() if k else 1
            assert w[a, b] == Fraction(str(expected))


@settings(max_examples=30, deadline=None)
@given(st.integers(2, 4).flatmap(square), st.integers(2, 4).flatmap(square))
def test_exterior_power_is_functorial(a, b):
    if a.nrows != b.nrows:
        return
    assert exterior_power(a @ b, 2) == exterior_power(a, 2) @ exterior_power(b, 2)


def test_eigen1_filtration_jordan_chain():
    # one 3-block and one 1-block at eigenvalue 1, plus eigenvalue 2
    m = Matrix([[1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 2]])
    dims, r = eigen1_filtration(m)
    assert dims == [2, 3, 4] and r == 3
    assert jordan_blocks_from_dims(dims) == [3, 1]


def test_eigen1_filtration_without_eigenvalue_one():
    assert eigen1_filtration(Matrix([[2, 1], [1, 1]])) == ([0], 0)


def test_matrix_log_unipotent():
    m = Matrix([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    log = matrix_log_unipotent(m)
    assert log == Matrix([[0, 1, Fraction(-1, 2)], [0, 0, 1], [0, 0, 0]])
    with pytest.raises(ValueError):
        matrix_log_unipotent(Matrix([[2]]))
