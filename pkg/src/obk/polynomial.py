"""Integer polynomials as coefficient tuples, constant term first.

Equality "up to units" means up to multiplication by ±t^k, which is how Alexander
polynomials and characteristic polynomials are compared throughout.
"""
from fractions import Fraction

Poly = tuple  # tuple[int, ...]


def trim(p) -> Poly:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p) if p else (0,)


def normalize(p) -> Poly:
    """Unit-normal representative: nonzero constant term, positive lowest coefficient."""
    p = trim(p)
    if p == (0,):
        return p
    k = next(i for i, c in enumerate(p) if c != 0)
    p = p[k:]
    if p[0] < 0:
        p = tuple(-c for c in p)
    return p


def associated(p, q) -> bool:
    return normalize(p) == normalize(q)


def degree(p) -> int:
    p = trim(p)
    return -1 if p == (0,) else len(p) - 1


def evaluate(p, x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def mul(p, q) -> Poly:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return trim(out)


def reciprocal(p) -> Poly:
    """t^deg · p(1/t)."""
    return trim(tuple(reversed(trim(p))))


def interpolate(values) -> Poly:
    """Integer polynomial of degree < len(values) through (k, values[k]) for k = 0, 1, ..."""
    n = len(values)
    # Newton divided differences on the nodes 0..n-1
    dd = [Fraction(v) for v in values]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / level
    coeffs = [Fraction(0)] * n
    basis = [Fraction(1)]  # prod_{j<i} (t - j)
    for i in range(n):
        for k, b in enumerate(basis):
            coeffs[k] += dd[i] * b
        nxt = [Fraction(0)] * (len(basis) + 1)
        for k, b in enumerate(basis):
            nxt[k + 1] += b
            nxt[k] -= i * b
        basis = nxt
    if any(c.denominator != 1 for c in coeffs):
        raise ArithmeticError("interpolated polynomial is not integral")
    return trim(tuple(int(c) for c in coeffs))


def to_str(p, var: str = "t") -> str:
    p = trim(p)
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        mag = abs(c)
        body = str(mag) if (mag != 1 or not mono) else ""
        body += mono
        sign = "-" if c < 0 else "+"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
