"""Lattice points in dilations, the Ehrhart polynomial ``E(t)`` and the
lattice-point-sum polynomial ``s(t)``.

Both polynomials are obtained by exact interpolation through brute-force
counts: ``E`` through ``E(0) = 1`` and the counts at ``k = 1..n``, ``s``
through the sums at ``k = 1..n+1``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import floor, ceil

import numpy as np

from . import exact
from .exact import Q
from .errors import PolytopeError, NotReflexiveError, ResourceLimitError

DEFAULT_CELL_CAP = 10**8


@dataclass(frozen=True)
class Polynomial:
    """Univariate polynomial, coefficients lowest degree first."""

    coefficients: tuple

    def __post_init__(self):
        c = [Q(a) for a in self.coefficients]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __call__(self, t):
        t = Q(t)
        acc = Fraction(0)
        for a in reversed(self.coefficients):
            acc = acc * t + a
        return acc

    def coefficient(self, k):
        return self.coefficients[k] if k < len(self.coefficients) else Fraction(0)

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients))
            for i, a in enumerate(self.coefficients):
                for j, b in enumerate(other.coefficients):
                    out[i + j] += a * b
            return Polynomial(tuple(out))
        return Polynomial(tuple(a * Q(other) for a in self.coefficients))

    __rmul__ = __mul__


@dataclass(frozen=True)
class VectorPolynomial:
    """Polynomial with vector coefficients, lowest degree first."""

    coefficients: tuple
    dim: int

    def __post_init__(self):
        c = [tuple(Q(a) for a in v) for v in self.coefficients]
        while c and exact.is_zero(c[-1]):
            c.pop()
        object.__setattr__(self, "coefficients", tuple(c))

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def is_zero(self):
        return not self.coefficients

    def __call__(self, t):
        t = Q(t)
        acc = (Fraction(0),) * self.dim
        for v in reversed(self.coefficients):
            acc = exact.add(exact.scale(t, acc), v)
        return acc

    def coefficient(self, k):
        if k < len(self.coefficients):
            return self.coefficients[k]
        return (Fraction(0),) * self.dim

    def component(self, j):
        return Polynomial(tuple(v[j] for v in self.coefficients))


def interpolate(xs, ys):
    """Coefficients of the unique polynomial of degree < len(xs) through the
    points, by Newton divided differences."""
    xs = [Q(x) for x in xs]
    coef = [Q(y) for y in ys]
    m = len(xs)
    for j in range(1, m):
        for i in range(m - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    # expand the Newton form into monomials
    out = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        # out = out * (t - xs[i]) + coef[i]
        shifted = [Fraction(0)] + out[:-1]
        out = [s - xs[i] * o for s, o in zip(shifted, out)]
        out[0] += coef[i]
    return tuple(out)


# ---------------------------------------------------------------------------
# enumeration


def _integer_facets(hrep, k):
    """Scale ``<x, v> >= -k c`` for integer points x into integer data."""
    rows, rhs = [], []
    for v, c in hrep:
        row, d = exact.clear_denominators(tuple(v) + (k * c,))
        rows.append(row[:-1])
        rhs.append(row[-1])
    return rows, rhs


def _dilated_points(p, k, strict, cap):
    if k < 1 or int(k) != k:
        raise ValueError(f"dilation must be a positive integer, got {k}")
    n = p.dim
    lo = [ceil(min(v[j] for v in p.vertices) * k) for j in range(n)]
    hi = [floor(max(v[j] for v in p.vertices) * k) for j in range(n)]
    cells = 1
    for a, b in zip(lo, hi):
        cells *= max(b - a + 1, 0)
    if cells > cap:
        raise ResourceLimitError(f"bounding box of the {k}-th dilation has {cells} cells (cap {cap})")
    rows, rhs = _integer_facets(p.facets, k)
    bound = max(max(abs(a) for a in lo + hi), 1)
    biggest = max(sum(abs(a) for a in r) for r in rows) * bound + max(abs(r) for r in rhs)
    if biggest < 2**62:
        axes = [np.arange(a, b + 1, dtype=np.int64) for a, b in zip(lo, hi)]
        grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, n)
        a = np.array(rows, dtype=np.int64)
        b = np.array(rhs, dtype=np.int64)
        lhs = grid @ a.T + b
        keep = (lhs > 0).all(axis=1) if strict else (lhs >= 0).all(axis=1)
        return [tuple(int(x) for x in row) for row in grid[keep]]
    out = []
    for x in product(*(range(a, b + 1) for a, b in zip(lo, hi))):
        vals = [sum(r * y for r, y in zip(row, x)) + c for row, c in zip(rows, rhs)]
        if all(v > 0 for v in vals) if strict else all(v >= 0 for v in vals):
            out.append(x)
    return out


def lattice_points(p, k=1, cap=DEFAULT_CELL_CAP):
    """Points of ``p`` in ``(1/k) Z^n``, boundary included, row-major order."""
    return [tuple(Fraction(a, k) for a in x) for x in _dilated_points(p, k, False, cap)]


def interior_lattice_points(p, k=1, cap=DEFAULT_CELL_CAP):
    return [tuple(Fraction(a, k) for a in x) for x in _dilated_points(p, k, True, cap)]


def count_and_sum(p, k, interior=False, cap=DEFAULT_CELL_CAP):
    """``(#points, sum of points)`` of ``p`` in ``(1/k) Z^n``."""
    pts = _dilated_points(p, k, interior, cap)
    total = [0] * p.dim
    for x in pts:
        for j, a in enumerate(x):
            total[j] += a
    return len(pts), tuple(Fraction(a, k) for a in total)


def _require_lattice(p):
    if not p.is_lattice:
        raise PolytopeError("Ehrhart data needs a lattice polytope", "not_lattice")


def ehrhart_polynomial(p, cap=DEFAULT_CELL_CAP):
    _require_lattice(p)
    n = p.dim
    xs = [0] + list(range(1, n + 1))
    ys = [1] + [count_and_sum(p, k, cap=cap)[0] for k in range(1, n + 1)]
    return Polynomial(interpolate(xs, ys))


def lattice_sum_polynomial(p, cap=DEFAULT_CELL_CAP):
    _require_lattice(p)
    n = p.dim
    xs = list(range(1, n + 2))
    sums = [count_and_sum(p, k, cap=cap)[1] for k in xs]
    comps = [interpolate(xs, [s[j] for s in sums]) for j in range(n)]
    coeffs = tuple(tuple(comps[j][i] for j in range(n)) for i in range(n + 1))
    return VectorPolynomial(coeffs, n)


@dataclass
class ReciprocityReport:
    ehrhart_at_minus_one: Fraction
    sum_at_minus_one: tuple
    bv_general: dict  # (phi, k) -> (interior value, (-1)^(n+d) * polynomial at -k)

    @property
    def ok(self):
        return all(a == b for a, b in self.bv_general.values())


def reciprocity_check(p, ehrhart=None, lattice_sum=None, cap=DEFAULT_CELL_CAP):
    """Evaluate ``E(-1)`` and ``s(-1)`` and compare the general reciprocity law
    for ``phi = 1`` and ``phi = x`` at ``k = 1, 2`` with interior counts.

    The law ``L_int(k) = (-1)^(n+d) L(-k)`` is checked for the unscaled sums
    ``L(k) = sum of phi(b) over b in kP ∩ Z^n``.  Since ``s`` sums the points
    of ``P ∩ (Z/k)^n`` we have ``L(t) = t * s(t)`` for ``phi = x``.
    """
    from .polytope import is_reflexive

    if not is_reflexive(p):
        raise NotReflexiveError("reciprocity check needs a reflexive polytope")
    e = ehrhart or ehrhart_polynomial(p, cap)
    s = lattice_sum or lattice_sum_polynomial(p, cap)
    n = p.dim
    bv = {}
    for k in (1, 2):
        cnt, tot = count_and_sum(p, k, interior=True, cap=cap)
        bv[("1", k)] = (Fraction(cnt), (-1) ** n * e(-k))
        bv[("x", k)] = (exact.scale(k, tot), exact.scale((-1) ** (n + 1) * (-k), s(-k)))
    return ReciprocityReport(e(-1), s(-1), bv)
