"""Small exact linear algebra over the rationals.

Matrices are tuples of row tuples.  Entries may be ``int`` or
``fractions.Fraction``; results come back as Fractions reduced to ``int``
whenever the denominator is 1, so integer data stays hashable against
integer data.
"""
from fractions import Fraction


class SingularMatrix(ValueError):
    pass


def normalize(x):
    if isinstance(x, Fraction) and x.denominator == 1:
        return int(x.numerator)
    return x


def vec(xs):
    return tuple(normalize(Fraction(x)) for x in xs)


def mat(rows):
    return tuple(vec(r) for r in rows)


def identity(n):
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def transpose(m):
    return tuple(zip(*m)) if m else ()


def matmul(a, b):
    bt = transpose(b)
    return tuple(
        tuple(normalize(sum((x * y for x, y in zip(row, col)), Fraction(0)))
              for col in bt)
        for row in a)


def matvec(m, v):
    return tuple(normalize(sum((x * y for x, y in zip(row, v)), Fraction(0)))
                 for row in m)


def dot(u, v):
    return normalize(sum((x * y for x, y in zip(u, v)), Fraction(0)))


def add(u, v):
    return tuple(normalize(Fraction(x) + y) for x, y in zip(u, v))


def sub(u, v):
    return tuple(normalize(Fraction(x) - y) for x, y in zip(u, v))


def scale(c, v):
    return tuple(normalize(Fraction(c) * x) for x in v)


def neg(v):
    return tuple(-x for x in v)


def _rref(rows, ncols):
    """Row-reduce a list of Fraction lists in place; return pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def rank(m):
    if not m:
        return 0
    rows = [[Fraction(x) for x in row] for row in m]
    return len(_rref(rows, len(rows[0])))


def inverse(m):
    n = len(m)
    rows = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(m)]
    pivots = _rref(rows, n)
    if pivots != list(range(n)):
        raise SingularMatrix("matrix is singular")
    return tuple(tuple(normalize(x) for x in row[n:]) for row in rows)


def det(m):
    n = len(m)
    rows = [[Fraction(x) for x in row] for row in m]
    result = Fraction(1)
    for c in range(n):
        p = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if p is None:
            return 0
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            result = -result
        result *= rows[c][c]
        for i in range(c + 1, n):
            f = rows[i][c] / rows[c][c]
            if f:
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[c])]
    return normalize(result)


def solve(m, b):
    """Solve ``m x = b`` for square nonsingular ``m``."""
    return matvec(inverse(m), b)


def nullspace(m, ncols=None):
    """Basis of the right null space of ``m``."""
    if ncols is None:
        ncols = len(m[0])
    rows = [[Fraction(x) for x in row] for row in m]
    pivots = _rref(rows, ncols) if rows else []
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for r, p in enumerate(pivots):
            v[p] = -rows[r][f]
        basis.append(tuple(normalize(x) for x in v))
    return basis


def primitive(v):
    """Scale a nonzero rational vector to a primitive integer vector, same direction."""
    from math import gcd, lcm
    fr = [Fraction(x) for x in v]
    den = 1
    for x in fr:
        den = lcm(den, x.denominator)
    ints = [int(x * den) for x in fr]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(ints)
    return tuple(x // g for x in ints)
