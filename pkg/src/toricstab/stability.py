"""Stability invariants of a toric Fano variety read off its moment polytope.

All functions take the polytope ``Delta`` (a :class:`~toricstab.polytope.Polytope`
in the ``M`` lattice) and work in exact arithmetic.

* Ding invariant of a convex piecewise linear ``u``:
  ``I(u) = -u(0) + (1/vol) * integral of u over Delta``.
* Ding / K-polystability: the integral of ``x`` over ``Delta`` vanishes.
* Chow condition at level ``i``: ``s(i) = E(i) * b`` with ``b`` the barycenter.
* ``delta = min_i 1 / (<b, v_i> + c_i)``.
* ``R = dist(0, Q) / dist(b, Q)`` where ``Q`` is where the ray from ``b``
  through the origin leaves ``Delta``.
"""

from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .exact import Q as _q, dot, scale, sub
from .errors import InvariantViolation, NotReflexiveError, PolytopeError
from .lattice import ehrhart_polynomial, lattice_sum_polynomial
from .polytope import (
    HalfspaceRep,
    affine_dimension,
    boundary_ray_point,
    is_reflexive,
    triangulate,
    vertex_enumeration,
)


@dataclass(frozen=True)
class PiecewiseLinearFunction:
    """``u(x) = max_k (<a_k, x> + c_k)`` given as pieces ``(a_k, c_k)``."""

    pieces: tuple

    def __post_init__(self):
        seen = []
        for a, c in self.pieces:
            piece = (tuple(_q(x) for x in a), _q(c))
            if piece not in seen:
                seen.append(piece)
        if not seen:
            raise ValueError("a piecewise linear function needs at least one piece")
        if any(len(a) != len(seen[0][0]) for a, _ in seen):
            raise ValueError("pieces have different dimensions")
        object.__setattr__(self, "pieces", tuple(seen))

    @classmethod
    def affine(cls, grad, const=0):
        return cls(((grad, const),))

    @property
    def dim(self):
        return len(self.pieces[0][0])

    def __call__(self, x):
        return max(dot(a, x) + c for a, c in self.pieces)

    def plus_affine(self, grad, const=0):
        grad = tuple(_q(x) for x in grad)
        return PiecewiseLinearFunction(tuple((exact.add(a, grad), c + _q(const)) for a, c in self.pieces))

    def normalized(self):
        """Subtract a piece attaining the max at 0 (lowest index on ties).

        The result is >= 0 everywhere and vanishes at 0.
        """
        top = max(c for _, c in self.pieces)
        a0, c0 = next(p for p in self.pieces if p[1] == top)
        return self.plus_affine(exact.neg(a0), -c0)


def _zero(v):
    return exact.is_zero(v)


def _require_reflexive(p, what):
    if not is_reflexive(p):
        raise NotReflexiveError(f"{what} is stated for reflexive polytopes")


# ---------------------------------------------------------------------------
# Ding


def _piece_region(p, u, k):
    ak, ck = u.pieces[k]
    extra = []
    for j, (aj, cj) in enumerate(u.pieces):
        if j == k:
            continue
        normal = sub(ak, aj)
        if _zero(normal):
            if ck < cj:
                return None
            continue
        # <ak - aj, x> >= cj - ck
        extra.append((normal, ck - cj))
    return p.facets.with_constraints(extra)


def ding_invariant(p, u):
    """Exact Ding invariant of ``u`` on ``p``.

    ``p`` is split into the regions where each piece attains the max; each
    region is triangulated and the affine piece is integrated exactly on it.
    """
    if u.dim != p.dim:
        raise ValueError("function and polytope dimensions differ")
    n = p.dim
    total = Fraction(0)
    for k, (a, c) in enumerate(u.pieces):
        region = _piece_region(p, u, k)
        if region is None:
            continue
        verts = vertex_enumeration(region, allow_degenerate=True)
        if len(verts) < n + 1 or affine_dimension(verts) < n:
            continue
        total += sum((s.integrate_affine(a, c) for s in triangulate(verts)), Fraction(0))
    origin = (Fraction(0),) * n
    return -u(origin) + total / p.volume()


def ding_polystable(p):
    _require_reflexive(p, "the barycenter criterion for Ding polystability")
    return _zero(p.moment())


def k_polystable(p):
    _require_reflexive(p, "the barycenter criterion for K-polystability")
    return _zero(p.moment())


# ---------------------------------------------------------------------------
# delta and R


def delta_invariant(hrep, b):
    """``min_i 1 / (<b, v_i> + c_i)`` over the facets ``<x, v_i> >= -c_i``."""
    if not isinstance(hrep, HalfspaceRep):
        hrep = hrep.facets
    best = None
    for v, c in hrep:
        den = dot(b, v) + c
        if den <= 0:
            raise PolytopeError(
                f"point {exact.format_vector(b)} is not interior (slack {den})", "not_interior"
            )
        val = 1 / den
        if best is None or val < best:
            best = val
    return best


@dataclass(frozen=True)
class RicciBound:
    value: Fraction
    q_point: tuple | None
    scale: Fraction | None  # c with Q = c * b (negative)
    closed_form: Fraction


def greatest_ricci_lower_bound(p, b=None):
    """``R`` together with the boundary point ``Q`` (``None`` if ``b = 0``).

    ``b`` defaults to the barycenter of ``p``.  The value is computed from the
    parameter ``c`` with ``Q = c b`` and cross-checked against the squared
    distance ratio and against ``1 / (1 + max_i <b, v_i> / c_i)``.
    """
    if b is None:
        b = p.barycenter()
    hrep = p.facets
    if _zero(b):
        return RicciBound(Fraction(1), None, None, Fraction(1))
    q = boundary_ray_point(hrep, exact.neg(b))
    j = next(i for i, x in enumerate(b) if x != 0)
    c = q[j] / b[j]
    if scale(c, b) != q or c >= 0:
        raise InvariantViolation("boundary point is not a negative multiple of b")
    r = -c / (1 - c)
    closed = 1 / (1 + max(dot(b, v) / off for v, off in hrep))
    d0 = dot(q, q)
    d1 = dot(sub(b, q), sub(b, q))
    if r * r != d0 / d1 or closed != r:
        raise InvariantViolation(f"R disagrees: {r} vs closed form {closed}")
    return RicciBound(r, q, c, closed)


def facet_selector(p, b=None):
    """Indices of the facets containing ``Q``: the argmax of ``<b, v_i>/c_i``."""
    if b is None:
        b = p.barycenter()
    if _zero(b):
        raise ValueError("barycenter is 0; there is no boundary point Q")
    ratios = [dot(b, v) / c for v, c in p.facets]
    top = max(ratios)
    chosen = tuple(i for i, r in enumerate(ratios) if r == top)
    q = boundary_ray_point(p.facets, exact.neg(b))
    on = tuple(i for i, s in enumerate(p.facets.slack(q)) if s == 0)
    if on != chosen:
        raise InvariantViolation(f"Q lies on facets {on}, argmax gives {chosen}")
    return chosen


# ---------------------------------------------------------------------------
# Chow


@dataclass
class ChowData:
    """Ehrhart and lattice-sum polynomials plus the barycenter of a polytope."""

    ehrhart: object
    lattice_sum: object
    barycenter: tuple

    @classmethod
    def of(cls, p):
        return cls(ehrhart_polynomial(p), lattice_sum_polynomial(p), p.barycenter())

    def sides(self, i):
        """``(s(i), E(i) * b)``; the level-``i`` condition asks them to agree."""
        return self.lattice_sum(i), scale(self.ehrhart(i), self.barycenter)


def _chow_data(p, data):
    return data if data is not None else ChowData.of(p)


def chow_condition_fixed(p, i, data=None):
    lhs, rhs = _chow_data(p, data).sides(i)
    return lhs == rhs


def chow_condition_asymptotic(p, data=None):
    d = _chow_data(p, data)
    return all(
        d.lattice_sum.coefficient(k) == scale(d.ehrhart.coefficient(k), d.barycenter)
        for k in range(p.dim + 1)
    )


@dataclass
class ChainReport:
    antecedent: bool  # asymptotic Chow condition
    consequent: bool  # integral of x vanishes
    implication: bool
    ehrhart_at_minus_one: Fraction
    sum_at_minus_one: tuple
    proof_route_barycenter: tuple | None  # s(-1)/E(-1), only when antecedent holds
    proof_route_agrees: bool

    @property
    def holds(self):
        return self.implication and self.proof_route_agrees


def theorem_chain(p, data=None):
    """Check 'asymptotic Chow condition => zero barycenter' two ways.

    Besides the plain implication between the two verdicts, the conclusion is
    re-derived by evaluating the fitted polynomials at ``-1``: the identity
    ``s(-1) = E(-1) b`` together with ``E(-1) = (-1)^n`` and ``s(-1) = 0``
    forces ``b = 0``.
    """
    _require_reflexive(p, "the theorem chain")
    d = _chow_data(p, data)
    ante = chow_condition_asymptotic(p, d)
    cons = _zero(p.moment())
    e1 = d.ehrhart(-1)
    s1 = d.lattice_sum(-1)
    minus_one_ok = e1 == (-1) ** p.dim and _zero(s1)
    if ante:
        derived = scale(1 / e1, s1)
        agrees = minus_one_ok and derived == d.barycenter and _zero(derived) == cons
    else:
        derived = None
        agrees = minus_one_ok
    return ChainReport(ante, cons, (not ante) or cons, e1, s1, derived, agrees)
