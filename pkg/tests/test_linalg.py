import random

import sympy as sp
from hypothesis import given, strategies as st

from obk import _linalg as la
from obk import polynomial as poly


def random_matrix(rng, n=None):
    n = n if n is not None else rng.randint(1, 6)
    return tuple(tuple(rng.randint(-3, 3) for _ in range(n)) for _ in range(n))


@given(st.integers(0, 10**9))
def test_det_and_rank_against_sympy(seed):
    m = random_matrix(random.Random(seed))
    sm = sp.Matrix(m)
    assert la.det(m) == int(sm.det())
    assert la.rank(m) == sm.rank()


@given(st.integers(0, 10**9))
def test_charpoly_against_sympy(seed):
    m = random_matrix(random.Random(seed))
    expected = tuple(int(c) for c in reversed(sp.Matrix(m).charpoly().all_coeffs()))
    assert la.charpoly(m) == expected


@given(st.integers(0, 10**9))
def test_inverse(seed):
    m = random_matrix(random.Random(seed))
    if la.det(m) == 0:
        assert la.integer_inverse(m) is None
        return
    inv = la.inverse(m)
    assert la.matmul(m, inv) == la.identity(len(m))
    if abs(la.det(m)) == 1:
        assert la.matmul(m, la.integer_inverse(m)) == la.identity(len(m))


def test_empty_matrix():
    assert la.det(()) == 1
    assert la.charpoly(()) == (1,)


def test_polynomial_helpers():
    assert poly.normalize((0, 0, -1, 3, -1)) == (1, -3, 1)
    assert poly.associated((-1, 1), (0, 1, -1))
    assert poly.mul((1, 1), (1, -1)) == (1, 0, -1)
    assert poly.degree((0,)) == -1
    assert poly.reciprocal((1, 2, 3)) == (3, 2, 1)
    assert poly.interpolate([poly.evaluate((1, -3, 1), k) for k in range(3)]) == (1, -3, 1)
    assert poly.to_str((1, -3, 1))
