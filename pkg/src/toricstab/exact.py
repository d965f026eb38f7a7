"""Exact rational scalars, vectors and matrices.

Scalars are :class:`fractions.Fraction` (arbitrary precision, always reduced,
positive denominator, zero stored as 0/1).  Vectors are tuples of Fractions and
matrices are tuples of such rows; both are immutable.
"""

from fractions import Fraction
from math import gcd
from functools import reduce

from .errors import DimensionError

Rational = Fraction


def Q(x):
    """Coerce ints, Fractions and strings like ``"-3/4"`` to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floats are not accepted; pass ints, Fractions or strings")
    return Fraction(x)


def vector(entries):
    return tuple(Q(x) for x in entries)


def matrix(rows):
    rows = tuple(vector(r) for r in rows)
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise DimensionError("matrix rows have different lengths")
    return rows


def dot(u, v):
    if len(u) != len(v):
        raise DimensionError(f"length {len(u)} vs {len(v)}")
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def scale(c, v):
    return tuple(c * a for a in v)


def neg(v):
    return tuple(-a for a in v)


def is_zero(v):
    return all(a == 0 for a in v)


def matvec(m, v):
    return tuple(dot(row, v) for row in m)


def matmul(a, b):
    cols = list(zip(*b))
    return tuple(tuple(dot(row, col) for col in cols) for row in a)


def transpose(m):
    return tuple(zip(*m))


def determinant(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError("determinant of a non-square matrix")
    if n == 0:
        return Fraction(1)
    # clear denominators so Bareiss runs over the integers
    den = 1
    for row in m:
        for x in row:
            den = den * Fraction(x).denominator // gcd(den, Fraction(x).denominator)
    a = [[int(Fraction(x) * den) for x in row] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return Fraction(sign * a[n - 1][n - 1], den**n)


def solve_linear(m, rhs):
    """Solve ``m x = rhs`` exactly.

    Returns the solution tuple, or ``None`` when ``m`` is singular.
    """
    n = len(m)
    if any(len(row) != n for row in m):
        raise DimensionError("solve_linear needs a square matrix")
    if len(rhs) != n:
        raise DimensionError(f"rhs has length {len(rhs)}, expected {n}")
    a = [[Q(x) for x in row] + [Q(r)] for row, r in zip(m, rhs)]
    for col in range(n):
        piv = next((i for i in range(col, n) if a[i][col] != 0), None)
        if piv is None:
            return None
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col] / p
                a[i] = [x - f * y for x, y in zip(a[i], a[col])]
    return tuple(a[i][n] / a[i][i] for i in range(n))


def rank(rows):
    """Rank of a list of rational vectors."""
    a = [list(map(Q, r)) for r in rows]
    if not a:
        return 0
    ncol = len(a[0])
    r = 0
    for col in range(ncol):
        piv = next((i for i in range(r, len(a)) if a[i][col] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, len(a)):
            if a[i][col] != 0:
                f = a[i][col] / a[r][col]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == len(a):
            break
    return r


def kernel_vector(rows, n):
    """A nonzero integer vector orthogonal to ``n - 1`` independent rows.

    Computed as the generalized cross product (signed maximal minors), so the
    result is exact and, for integer input, integral.
    """
    if len(rows) != n - 1:
        raise DimensionError("kernel_vector expects n - 1 rows")
    out = []
    for j in range(n):
        minor = [[row[k] for k in range(n) if k != j] for row in rows]
        out.append((-1) ** j * determinant(minor))
    return tuple(out)


def make_primitive(v):
    """Divide an integer vector by the gcd of its entries."""
    ints = []
    for x in v:
        x = Q(x)
        if x.denominator != 1:
            raise ValueError(f"make_primitive needs integers, got {x}")
        ints.append(int(x))
    g = reduce(gcd, (abs(x) for x in ints), 0)
    if g == 0:
        raise ValueError("cannot make the zero vector primitive")
    return tuple(x // g for x in ints)


def is_primitive(v):
    return all(Q(x).denominator == 1 for x in v) and reduce(gcd, (abs(int(x)) for x in v), 0) == 1


def clear_denominators(v):
    """Return ``(w, d)`` with ``w = d * v`` integral and ``d > 0`` minimal."""
    d = 1
    for x in v:
        den = Q(x).denominator
        d = d * den // gcd(d, den)
    return tuple(int(Q(x) * d) for x in v), d


def primitive_direction(v):
    """Primitive integer vector on the ray through a nonzero rational vector,
    together with the positive scalar ``lam`` such that ``v = lam * w``."""
    w, d = clear_denominators(v)
    p = make_primitive(w)
    g = next(a // b for a, b in zip(w, p) if b != 0)
    return p, Fraction(g, d)


def is_integral(v):
    return all(Q(x).denominator == 1 for x in v)


def format_rational(x):
    return str(Q(x))


def format_vector(v):
    return "(" + ",".join(format_rational(x) for x in v) + ")"


def parse_vector(text):
    text = text.strip()
    if not (text.startswith("(") and text.endswith(")")):
        raise ValueError(f"not a vector: {text!r}")
    body = text[1:-1].strip()
    if not body:
        return ()
    return tuple(Fraction(t.strip()) for t in body.split(","))


def identity(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def inverse(m):
    n = len(m)
    cols = []
    for e in identity(n):
        x = solve_linear(m, e)
        if x is None:
            raise ValueError("matrix is singular")
        cols.append(x)
    return transpose(cols)
