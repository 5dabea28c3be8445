"""Exact integer matrix helpers.

Matrices are tuples of row tuples of Python ints.  Nothing here touches floating point.
"""
from fractions import Fraction

Matrix = tuple  # tuple[tuple[int, ...], ...]


def as_matrix(rows) -> Matrix:
    return tuple(tuple(int(x) for x in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(n: int, m: int | None = None) -> Matrix:
    return tuple((0,) * (n if m is None else m) for _ in range(n))


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def matmul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a)


def matsub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def trace(a: Matrix) -> int:
    return sum(a[i][i] for i in range(len(a)))


def block(a: Matrix, b: Matrix, c: Matrix, d: Matrix) -> Matrix:
    """[[a, b], [c, d]]; empty blocks are fine."""
    top = [tuple(ra) + tuple(rb) for ra, rb in zip(a, b)] if a else [tuple(rb) for rb in b]
    bot = [tuple(rc) + tuple(rd) for rc, rd in zip(c, d)] if c else [tuple(rd) for rd in d]
    return tuple(top + bot)


def det(a: Matrix) -> int:
    """Bareiss fraction-free elimination."""
    n = len(a)
    if n == 0:
        return 1
    m = [list(row) for row in a]
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _echelon(rows):
    m = [[Fraction(x) for x in row] for row in rows]
    pivots = []
    r = 0
    ncols = len(m[0]) if m else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m, pivots


def rank(rows) -> int:
    if not rows:
        return 0
    return len(_echelon(rows)[1])


def solve(a: Matrix, b) -> tuple | None:
    """Solve a·x = b over the rationals; None when inconsistent.  Free variables are set to 0."""
    n = len(a[0]) if a else 0
    aug = [list(row) + [rhs] for row, rhs in zip(a, b)]
    m, pivots = _echelon(aug)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, c in zip(m, pivots):
        x[c] = row[n]
    return tuple(x)


def inverse(a: Matrix) -> tuple:
    """Rational inverse; raises ZeroDivisionError when singular."""
    n = len(a)
    aug = [list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(a)]
    m, pivots = _echelon(aug)
    if pivots[:n] != list(range(n)):
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(row[n:]) for row in m)


def integer_inverse(a: Matrix) -> Matrix | None:
    """Inverse over the integers, or None when a is not unimodular."""
    if abs(det(a)) != 1:
        return None
    return tuple(tuple(int(x) for x in row) for row in inverse(a))


def charpoly(a: Matrix) -> tuple:
    """Coefficients of det(tI - a), constant term first (Faddeev-LeVerrier, exact over Z)."""
    n = len(a)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    m = zeros(n)
    for k in range(1, n + 1):
        c = coeffs[n - k + 1]
        m = tuple(
            tuple(v + (c if i == j else 0) for j, v in enumerate(row))
            for i, row in enumerate(matmul(a, m))
        )
        tr = trace(matmul(a, m))
        assert tr % k == 0
        coeffs[n - k] = -tr // k
    return tuple(coeffs)
