"""Polytopes with exact rational data.

A :class:`Polytope` is full-dimensional, contains the origin in its interior
and keeps both its vertex list and its facet inequalities.  The facets are
stored as a :class:`HalfspaceRep`, i.e. pairs ``(v_i, c_i)`` encoding
``<x, v_i> >= -c_i`` with ``v_i`` a primitive integer vector.

``lattice_tag`` records which lattice the polytope lives in: ``"fan"`` for the
polytope ``P`` in ``N`` whose face fan defines the toric variety, ``"dual"``
for the moment polytope ``Delta`` in ``M``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial

from . import exact
from .exact import Q, dot, sub, add, scale
from .errors import DimensionError, PolytopeError, NotReflexiveError

FAN = "fan"
DUAL = "dual"
_TAGS = (FAN, DUAL)


def other_tag(tag):
    return DUAL if tag == FAN else FAN


@dataclass(frozen=True)
class HalfspaceRep:
    """Facet inequalities ``<x, normals[i]> >= -offsets[i]``."""

    normals: tuple
    offsets: tuple

    def __post_init__(self):
        if len(self.normals) != len(self.offsets):
            raise DimensionError("normals and offsets differ in length")
        object.__setattr__(self, "normals", tuple(tuple(Q(a) for a in v) for v in self.normals))
        object.__setattr__(self, "offsets", tuple(Q(c) for c in self.offsets))

    @classmethod
    def from_pairs(cls, pairs):
        pairs = list(pairs)
        return cls(tuple(v for v, _ in pairs), tuple(c for _, c in pairs))

    @property
    def dim(self):
        return len(self.normals[0]) if self.normals else 0

    def __len__(self):
        return len(self.normals)

    def __iter__(self):
        return iter(zip(self.normals, self.offsets))

    def slack(self, x):
        """``<x, v_i> + c_i`` for every facet; all >= 0 iff ``x`` is inside."""
        return tuple(dot(x, v) + c for v, c in self)

    def contains(self, x, strict=False):
        if strict:
            return all(s > 0 for s in self.slack(x))
        return all(s >= 0 for s in self.slack(x))

    def sorted(self):
        return HalfspaceRep.from_pairs(sorted(self))

    def is_anticanonical(self):
        return all(c == 1 for c in self.offsets)

    def with_constraints(self, pairs):
        return HalfspaceRep.from_pairs(list(self) + list(pairs))


# ---------------------------------------------------------------------------
# convex hulls


def affine_dimension(points):
    points = list(points)
    if not points:
        return -1
    return exact.rank([sub(p, points[0]) for p in points[1:]])


def hull_facets(points):
    """Facet inequalities of the convex hull of a full-dimensional point set.

    Brute force over ``n``-subsets: every hyperplane through ``n`` affinely
    independent points that leaves all points on one side supports a facet.
    Returns a sorted list of ``(normal, h)`` with ``<x, normal> >= h`` and
    ``normal`` primitive.
    """
    points = [tuple(Q(a) for a in p) for p in points]
    if not points:
        raise PolytopeError("empty point set", "empty")
    n = len(points[0])
    if affine_dimension(points) < n:
        raise PolytopeError("point set is not full-dimensional", "not_full_dimensional")
    # scale to integers so that all minors are integer arithmetic
    flat = [a for p in points for a in p]
    _, den = exact.clear_denominators(flat)
    ipts = [tuple(int(a * den) for a in p) for p in points]
    ipts_unique = sorted(set(ipts))
    found = {}
    for combo in combinations(range(len(ipts_unique)), n):
        base = ipts_unique[combo[0]]
        rows = [tuple(a - b for a, b in zip(ipts_unique[i], base)) for i in combo[1:]]
        normal = exact.kernel_vector(rows, n) if n > 1 else (Fraction(1),)
        if all(a == 0 for a in normal):
            continue
        normal = exact.make_primitive(normal)
        flipped = tuple(-a for a in normal)
        h0 = sum(a * b for a, b in zip(normal, base))
        if found.get(normal) == h0 or found.get(flipped) == -h0:
            continue
        vals = [sum(a * b for a, b in zip(normal, p)) for p in ipts_unique]
        if all(v >= h0 for v in vals):
            found[normal] = h0
        elif all(v <= h0 for v in vals):
            found[flipped] = -h0
    return sorted((normal, Fraction(h, den)) for normal, h in found.items())


def _is_vertex(x, hrep):
    tight = [v for v, s in zip(hrep.normals, hrep.slack(x)) if s == 0]
    return exact.rank(tight) == len(x)


def hull_vertices(points):
    """Vertices of the convex hull (input order kept, duplicates dropped)."""
    points = [tuple(Q(a) for a in p) for p in points]
    hrep = HalfspaceRep.from_pairs((v, -h) for v, h in hull_facets(points))
    out = []
    for p in points:
        if p not in out and _is_vertex(p, hrep):
            out.append(p)
    return out


# ---------------------------------------------------------------------------
# H -> V


def _recession_ray(hrep):
    """A nonzero direction ``d`` with ``<d, v_i> >= 0`` for all facets, or None."""
    n = hrep.dim
    normals = list(hrep.normals)
    if exact.rank(normals) < n:
        # nontrivial lineality space
        for combo in combinations(normals, n - 1):
            if exact.rank(combo) == n - 1:
                d = exact.kernel_vector(list(combo), n)
                if all(dot(d, v) == 0 for v in normals):
                    return d
        # rank < n - 1: any vector orthogonal to a maximal independent subset
        basis = []
        for v in normals:
            if exact.rank(basis + [v]) > len(basis):
                basis.append(v)
        for e in exact.identity(n):
            rows = basis + [e]
            while len(rows) < n - 1:
                rows.append(e)
            if exact.rank(rows) == n - 1:
                return exact.kernel_vector(rows, n)
        return exact.identity(n)[0]
    for combo in combinations(normals, n - 1):
        if exact.rank(combo) < n - 1:
            continue
        d = exact.kernel_vector(list(combo), n)
        for cand in (d, exact.neg(d)):
            if all(dot(cand, v) >= 0 for v in normals):
                return cand
    return None


def vertex_enumeration(hrep, allow_degenerate=False):
    """Vertices of a bounded region given by facet inequalities.

    Every ``n``-subset of facets is solved exactly; feasible basic solutions
    are the vertices.  Output is sorted.  Unbounded regions raise
    :class:`PolytopeError`; so do empty or lower-dimensional regions unless
    ``allow_degenerate`` is set, in which case whatever vertices exist are
    returned.
    """
    n = hrep.dim
    if n == 0:
        raise DimensionError("empty halfspace representation")
    if _recession_ray(hrep) is not None:
        raise PolytopeError("region is unbounded", "unbounded")
    found = set()
    pairs = list(hrep)
    for combo in combinations(pairs, n):
        m = [v for v, _ in combo]
        rhs = [-c for _, c in combo]
        x = exact.solve_linear(m, rhs)
        if x is None or x in found:
            continue
        if hrep.contains(x):
            found.add(x)
    verts = sorted(found)
    if not allow_degenerate and (len(verts) < n + 1 or affine_dimension(verts) < n):
        raise PolytopeError("region is empty or not full-dimensional", "not_full_dimensional")
    return verts


# ---------------------------------------------------------------------------
# the polytope type


class Polytope:
    """Full-dimensional polytope with the origin in its interior.

    ``vertices`` may be rational; :attr:`is_lattice` tells whether they are all
    integral.  Construction validates the input and computes the facets.
    """

    def __init__(self, vertices, lattice_tag=FAN, label=None):
        if lattice_tag not in _TAGS:
            raise ValueError(f"lattice_tag must be one of {_TAGS}")
        verts = [tuple(Q(a) for a in v) for v in vertices]
        if not verts:
            raise PolytopeError("no vertices", "empty")
        n = len(verts[0])
        if n == 0 or any(len(v) != n for v in verts):
            raise DimensionError("vertices have inconsistent dimension")
        if len(set(verts)) != len(verts):
            raise PolytopeError("repeated vertex", "duplicate_vertex")
        facets = hull_facets(verts)
        hrep = HalfspaceRep.from_pairs((v, -h) for v, h in facets)
        if any(c <= 0 for c in hrep.offsets):
            raise PolytopeError("origin is not in the interior", "origin_not_interior")
        for v in verts:
            if not _is_vertex(v, hrep):
                raise PolytopeError(f"{exact.format_vector(v)} is not a vertex", "redundant_vertex")
        if lattice_tag == FAN:
            for v in verts:
                if not exact.is_primitive(v):
                    raise PolytopeError(
                        f"fan polytope vertex {exact.format_vector(v)} is not a primitive lattice point",
                        "non_primitive_vertex",
                    )
        self.dim = n
        self.vertices = tuple(sorted(verts))
        self.lattice_tag = lattice_tag
        self.label = label
        self.facets = hrep.sorted()
        self.facet_vertices = tuple(
            tuple(i for i, x in enumerate(self.vertices) if dot(x, v) == -c) for v, c in self.facets
        )

    @classmethod
    def _trusted(cls, vertices, facets, lattice_tag, label=None):
        """Build from vertices and facets already known to be consistent
        (used for duals, whose facets are read off the primal vertices)."""
        self = cls.__new__(cls)
        self.dim = len(vertices[0])
        self.vertices = tuple(sorted(vertices))
        self.lattice_tag = lattice_tag
        self.label = label
        self.facets = facets.sorted()
        self.facet_vertices = tuple(
            tuple(i for i, x in enumerate(self.vertices) if dot(x, v) == -c) for v, c in self.facets
        )
        return self

    @classmethod
    def from_points(cls, points, lattice_tag=FAN, label=None):
        """Convex hull of arbitrary points (non-vertices are dropped)."""
        return cls(hull_vertices(points), lattice_tag, label)

    @classmethod
    def from_facets(cls, hrep, lattice_tag=DUAL, label=None):
        if not isinstance(hrep, HalfspaceRep):
            hrep = HalfspaceRep.from_pairs(hrep)
        return cls(vertex_enumeration(hrep), lattice_tag, label)

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.lattice_tag == other.lattice_tag and self.vertices == other.vertices

    def __hash__(self):
        return hash((self.lattice_tag, self.vertices))

    def __repr__(self):
        verts = ", ".join(exact.format_vector(v) for v in self.vertices)
        return f"Polytope([{verts}], lattice_tag={self.lattice_tag!r})"

    @property
    def is_lattice(self):
        return all(exact.is_integral(v) for v in self.vertices)

    def contains(self, x, strict=False):
        return self.facets.contains(x, strict)

    def transformed(self, u):
        """Image under the linear map ``u`` (a square matrix)."""
        return Polytope([exact.matvec(u, v) for v in self.vertices], self.lattice_tag, self.label)

    def with_tag(self, lattice_tag):
        return Polytope(self.vertices, lattice_tag, self.label)

    # cached derived data; every method below is pure so recomputation under a
    # race is harmless
    def _cached(self, key, fn):
        cache = self.__dict__.setdefault("_cache", {})
        if key not in cache:
            cache[key] = fn()
        return cache[key]

    def triangulation(self):
        origin = (Fraction(0),) * self.dim
        hyper = [(v, -c) for v, c in self.facets]
        return self._cached("triangulation", lambda: triangulate(self.vertices, apex=origin, _facets=hyper))

    def volume(self):
        return self._cached("volume", lambda: sum((s.volume() for s in self.triangulation()), Fraction(0)))

    def moment(self):
        """The unnormalized integral of ``x`` over the polytope."""

        def compute():
            total = (Fraction(0),) * self.dim
            for s in self.triangulation():
                total = add(total, scale(s.volume(), s.centroid()))
            return total

        return self._cached("moment", compute)

    def barycenter(self):
        return scale(1 / self.volume(), self.moment())

    def dual(self):
        d = self._cached("dual", lambda: dual_polytope(self)[1])
        if d is None:
            raise NotReflexiveError("the dual is not a lattice polytope with primitive vertices")
        return d


def dual_halfspaces(p):
    """H-representation of ``{y : <x, y> >= -1 for every vertex x of p}``."""
    pairs = []
    for x in p.vertices:
        w, lam = exact.primitive_direction(x)
        pairs.append((w, 1 / lam))
    return HalfspaceRep.from_pairs(pairs).sorted()


def dual_polytope(p):
    """``(H-rep, polytope)`` of the polar dual, with the lattice tag flipped.

    A facet ``<x, v> >= -c`` of ``p`` gives the dual vertex ``v / c`` and a
    vertex of ``p`` gives a dual facet, so no enumeration is needed.  The
    polytope is None when the dual of a moment polytope has vertices that are
    not primitive lattice points, so it cannot serve as a fan polytope.
    """
    h = dual_halfspaces(p)
    verts = [scale(1 / c, v) for v, c in p.facets]
    tag = other_tag(p.lattice_tag)
    if tag == FAN and not all(exact.is_integral(v) and exact.is_primitive(v) for v in verts):
        return h, None
    return h, Polytope._trusted(verts, h, tag)


def facet_representation(p):
    """Facets of ``p`` read off the vertices of its dual.

    A dual vertex ``w`` gives the facet ``<x, w> >= -1``; rescaled to a
    primitive normal ``u = w / lam`` this is ``<x, u> >= -1/lam``.
    """
    pairs = []
    for w in vertex_enumeration(dual_halfspaces(p)):
        u, lam = exact.primitive_direction(w)
        pairs.append((u, 1 / lam))
    return HalfspaceRep.from_pairs(pairs).sorted()


def is_reflexive(p):
    """Lattice polytope whose facets all sit at lattice distance one.

    The facet normals are primitive, so the dual vertex ``v / c`` is integral
    exactly when ``c = 1``.
    """
    return p.is_lattice and all(c == 1 for c in p.facets.offsets)


def is_smooth_fano(p):
    """Every facet of the fan polytope is a unimodular simplex.

    ``p`` must be reflexive; the criterion is stated for Fano polytopes.
    """
    if not is_reflexive(p):
        raise NotReflexiveError("smoothness criterion needs a reflexive polytope")
    for idx in p.facet_vertices:
        if len(idx) != p.dim:
            return False
        if abs(exact.determinant([p.vertices[i] for i in idx])) != 1:
            return False
    return True


def boundary_ray_point(p, direction):
    """The point where the ray from 0 in ``direction`` leaves ``p``."""
    d = tuple(Q(a) for a in direction)
    if exact.is_zero(d):
        raise ValueError("direction must be nonzero")
    hrep = p.facets if isinstance(p, Polytope) else p
    t = min(c / -dot(d, v) for v, c in hrep if dot(d, v) < 0)
    return scale(t, d)


# ---------------------------------------------------------------------------
# triangulation


@dataclass(frozen=True)
class Simplex:
    vertices: tuple

    @property
    def dim(self):
        return len(self.vertices) - 1

    def signed_volume(self):
        v0 = self.vertices[0]
        return exact.determinant([sub(v, v0) for v in self.vertices[1:]]) / factorial(self.dim)

    def volume(self):
        return abs(self.signed_volume())

    def centroid(self):
        n1 = len(self.vertices)
        total = self.vertices[0]
        for v in self.vertices[1:]:
            total = add(total, v)
        return scale(Fraction(1, n1), total)

    def integrate_affine(self, grad, const):
        """Exact integral of ``<grad, x> + const`` over the simplex."""
        return self.volume() * (dot(grad, self.centroid()) + const)


def triangulate(points, apex=None, _facets=None):
    """Triangulate the convex hull of ``points``.

    Pulling triangulation: each facet not containing the apex is triangulated
    recursively (pulling from its first vertex in input order) and coned over
    the apex.  The apex defaults to the first vertex; pass an interior point
    such as the origin to get the cone-over-facets decomposition.
    """
    points = [tuple(Q(a) for a in p) for p in points]
    n = len(points[0])
    if _facets is None:
        verts = hull_vertices(points)
        hyper = hull_facets(verts)
    else:
        verts, hyper = points, _facets
    on = [frozenset(i for i, x in enumerate(verts) if dot(x, v) == h) for v, h in hyper]
    dims = {}

    def face_dim(face):
        if face not in dims:
            dims[face] = affine_dimension([verts[i] for i in face])
        return dims[face]

    def subfacets(face, d):
        out = []
        for f in on:
            s = face & f
            if s != face and s not in out and face_dim(s) == d - 1:
                out.append(s)
        return out

    def pull(face, d):
        if d == 0:
            return [(min(face),)]
        a = min(face)
        cells = []
        for sub_face in subfacets(face, d):
            if a in sub_face:
                continue
            cells.extend((a,) + c for c in pull(sub_face, d - 1))
        return cells

    everything = frozenset(range(len(verts)))
    if apex is None:
        cells = [tuple(verts[i] for i in c) for c in pull(everything, n)]
    else:
        apex = tuple(Q(a) for a in apex)
        cells = []
        for (v, h), f in zip(hyper, on):
            if dot(apex, v) == h:
                continue
            cells.extend((apex,) + tuple(verts[i] for i in c) for c in pull(f, n - 1))
    return [Simplex(c) for c in cells]


def unimodular_image(p, u):
    """Apply ``u`` in GL(n, Z) to a fan polytope, or its contragredient to a
    dual polytope, so that ``dual(unimodular_image(P, u))`` equals
    ``unimodular_image(dual(P), u)``."""
    if p.lattice_tag == FAN:
        return p.transformed(u)
    return p.transformed(exact.transpose(exact.inverse(u)))
