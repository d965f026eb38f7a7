"""Shared helpers and independent oracles for the test suite."""

import random
from fractions import Fraction
from itertools import product

import numpy as np
from scipy.spatial import Delaunay

from toricstab import catalog
from toricstab.exact import determinant, identity


def fan(name):
    return catalog.entry(name).fan_polytope()


def moment(name):
    return catalog.entry(name).moment_polytope()


def delaunay_volume_moment(vertices):
    """Volume and integral of x via scipy's Delaunay combinatorics, with each
    simplex measured exactly.  Shares no code with the library triangulation."""
    pts = np.array([[float(a) for a in v] for v in vertices])
    tri = Delaunay(pts)
    n = pts.shape[1]
    fact = 1
    for k in range(2, n + 1):
        fact *= k
    vol = Fraction(0)
    mom = [Fraction(0)] * n
    for simplex in tri.simplices:
        vs = [vertices[i] for i in simplex]
        m = [[Fraction(a) - Fraction(b) for a, b in zip(v, vs[0])] for v in vs[1:]]
        s = abs(determinant(m)) / fact
        vol += s
        for j in range(n):
            mom[j] += s * sum(Fraction(v[j]) for v in vs) / (n + 1)
    return vol, tuple(mom)


def shoelace(polygon):
    """Area and integral of x over a convex polygon given in cyclic order."""
    area = Fraction(0)
    mx = my = Fraction(0)
    k = len(polygon)
    for i in range(k):
        x0, y0 = map(Fraction, polygon[i])
        x1, y1 = map(Fraction, polygon[(i + 1) % k])
        cross = x0 * y1 - x1 * y0
        area += cross
        mx += (x0 + x1) * cross
        my += (y0 + y1) * cross
    sign = 1 if area > 0 else -1
    return sign * area / 2, (sign * mx / 6, sign * my / 6)


def cyclic_order(vertices):
    """Order 2D vertices counterclockwise around their mean (float angles only
    choose the order; the data stays exact)."""
    import math

    cx = sum(float(v[0]) for v in vertices) / len(vertices)
    cy = sum(float(v[1]) for v in vertices) / len(vertices)
    return sorted(vertices, key=lambda v: math.atan2(float(v[1]) - cy, float(v[0]) - cx))


def brute_roots(rays, bound=3):
    """Demazure roots by scanning a box, independent of the library search."""
    n = len(rays[0])
    out = []
    for m in product(range(-bound, bound + 1), repeat=n):
        pairs = [sum(a * b for a, b in zip(m, v)) for v in rays]
        if pairs.count(-1) == 1 and all(x >= 0 for x in pairs if x != -1):
            out.append(m)
    return sorted(out)


def brute_points(facets, k, box, strict=False):
    """Points of ``{x : <x, v> >= -c}`` in ``(1/k) Z^n`` by scanning ``box``."""
    out = []
    n = len(facets[0][0])
    for z in product(range(-box, box + 1), repeat=n):
        x = tuple(Fraction(a, k) for a in z)
        vals = [sum(a * b for a, b in zip(x, v)) + c for v, c in facets]
        if all(s > 0 for s in vals) if strict else all(s >= 0 for s in vals):
            out.append(x)
    return out


def random_unimodular(n, rng, steps=2):
    """A random GL(n, Z) matrix: a signed permutation times a few elementary
    shears with coefficients +-1."""
    perm = list(range(n))
    rng.shuffle(perm)
    m = [[0] * n for _ in range(n)]
    for i, j in enumerate(perm):
        m[i][j] = rng.choice((1, -1))
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.choice((1, -1))
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
    assert abs(determinant(m)) == 1
    return tuple(tuple(Fraction(a) for a in row) for row in m)


def rng(seed=0):
    return random.Random(seed)
