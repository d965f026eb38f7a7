"""Ding invariants of piecewise linear convex functions."""

import random
from fractions import Fraction

from toricstab import PiecewiseLinearFunction as PL, Polytope, catalog, ding_invariant

box = Polytope([(1, 1), (1, -1), (-1, 1), (-1, -1)], "dual")
print("I(box, max(0, x1)) =", ding_invariant(box, PL((((0, 0), 0), ((1, 0), 0)))))

bl = catalog.entry("Bl1P2").moment_polytope()
print("I(Bl1P2, -(x1 + x2)) =", ding_invariant(bl, PL.affine((-1, -1))))

# adding an affine function shifts I by its gradient paired with the barycenter
u = PL((((0, 0), 0), ((1, 2), -1)))
shift = ding_invariant(bl, u.plus_affine((3, 0), 7)) - ding_invariant(bl, u)
print("shift by (3,0):", shift, "= 3 * 1/12 =", Fraction(3, 12))

# on a balanced polytope every normalized convex u has I >= 0
rng = random.Random(0)
hexagon = catalog.entry("dP6").moment_polytope()
vals = []
for _ in range(50):
    pieces = tuple(((rng.randint(-3, 3), rng.randint(-3, 3)), rng.randint(-2, 2)) for _ in range(3))
    vals.append(ding_invariant(hexagon, PL(pieces).normalized()))
print("min over 50 random u on the hexagon:", min(vals))
