import random
from fractions import Fraction
from itertools import product

import pytest
import sympy
from sympy.matrices.normalforms import smith_normal_form as sympy_snf

from twistk.intlinalg import (
    clear_denominators,
    hermite_normal_form,
    integer_kernel,
    primitive_vector,
    rational_kernel,
    rational_rank,
    rational_solve,
    smith_normal_form,
)


def _random_matrix(rng, m, n, bound=6):
    return [[rng.randrange(-bound, bound + 1) for _ in range(n)] for _ in range(m)]


def _det(mat):
    return sympy.Matrix(mat).det()


def _is_row_hnf(h):
    m = len(h)
    n = len(h[0]) if m else 0
    pivots = []
    for i in range(m):
        row = h[i]
        nz = next((j for j in range(n) if row[j]), None)
        if nz is None:
            assert all(not any(h[k]) for k in range(i, m)), "zero rows must trail"
            break
        assert row[nz] > 0
        if pivots:
            assert nz > pivots[-1][1]
        for k in range(i):
            assert 0 <= h[k][nz] < row[nz]
        pivots.append((i, nz))
    return True


def test_hnf_properties_random():
    rng = random.Random(3)
    for _ in range(60):
        m, n = rng.randrange(1, 6), rng.randrange(1, 6)
        a = _random_matrix(rng, m, n)
        h, u = hermite_normal_form(a)
        assert abs(_det(u)) == 1
        assert sympy.Matrix(u) * sympy.Matrix(a) == sympy.Matrix(h)
        assert _is_row_hnf(h)


def test_integer_kernel_random():
    rng = random.Random(4)
    for _ in range(50):
        m, n = rng.randrange(1, 4), rng.randrange(1, 5)
        a = _random_matrix(rng, m, n, bound=4)
        basis = integer_kernel(a)
        am = sympy.Matrix(a)
        for v in basis:
            assert am * sympy.Matrix(n, 1, v) == sympy.zeros(m, 1)
        assert len(basis) == n - rational_rank([[Fraction(x) for x in row] for row in a])
        # completeness incl. saturation: every small kernel point is an
        # integer combination of the basis
        if basis and n <= 3:
            bt = [[Fraction(basis[r][c]) for r in range(len(basis))] for c in range(n)]
            for x in product(range(-3, 4), repeat=n):
                if any(x) and all(sum(a[i][j] * x[j] for j in range(n)) == 0 for i in range(m)):
                    combo = rational_solve(bt, [Fraction(v) for v in x])
                    assert combo is not None
                    assert all(c.denominator == 1 for c in combo)


def test_integer_kernel_zero_and_empty():
    assert integer_kernel([[0, 0], [0, 0]]) == [[1, 0], [0, 1]]
    assert integer_kernel([], ncols=3) == [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert integer_kernel([[1, 0], [0, 1]]) == []


def test_smith_normal_form_random():
    rng = random.Random(5)
    for _ in range(40):
        m, n = rng.randrange(1, 5), rng.randrange(1, 5)
        a = _random_matrix(rng, m, n, bound=5)
        d, s, t = smith_normal_form(a)
        assert abs(_det(s)) == 1 and abs(_det(t)) == 1
        assert sympy.Matrix(s) * sympy.Matrix(a) * sympy.Matrix(t) == sympy.Matrix(d)
        diag = [d[i][i] for i in range(min(m, n))]
        for i in range(m):
            for j in range(n):
                if i != j:
                    assert d[i][j] == 0
        for x, y in zip(diag, diag[1:]):
            if y:
                assert x != 0 and y % x == 0
        expected = sympy_snf(sympy.Matrix(a))
        got = sympy.diag(*diag, rows=m, cols=n) if diag else sympy.zeros(m, n)
        assert [abs(x) for x in expected.diagonal()] == [abs(x) for x in got.diagonal()]


def test_rational_kernel_and_rank():
    rows = [[Fraction(1), Fraction(2), Fraction(3)], [Fraction(2), Fraction(4), Fraction(6)]]
    assert rational_rank(rows) == 1
    basis = rational_kernel(rows)
    assert len(basis) == 2
    for v in basis:
        assert all(sum(r[i] * v[i] for i in range(3)) == 0 for r in rows)
    assert rational_rank([]) == 0
    assert rational_kernel([], ncols=2) == [
        [Fraction(1), Fraction(0)],
        [Fraction(0), Fraction(1)],
    ]


def test_rational_solve():
    a = [[Fraction(2), Fraction(1)], [Fraction(1), Fraction(-1)]]
    x = rational_solve(a, [Fraction(5), Fraction(1)])
    assert x == [Fraction(2), Fraction(1)]
    assert rational_solve([[Fraction(1)], [Fraction(1)]], [Fraction(0), Fraction(1)]) is None


def test_clear_denominators_and_primitive():
    rows = [[Fraction(1, 2), Fraction(1, 3)], [Fraction(0), Fraction(5, 6)]]
    assert clear_denominators(rows) == [[3, 2], [0, 5]]
    assert primitive_vector([4, -6, 2]) == [2, -3, 1]
    with pytest.raises(ValueError):
        primitive_vector([0, 0])
