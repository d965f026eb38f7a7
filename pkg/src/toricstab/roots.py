"""Demazure roots of the face fan of a Fano polytope and reductivity of the
automorphism group."""

from dataclasses import dataclass

from . import exact
from .errors import PolytopeError
from .lattice import lattice_points
from .polytope import FAN, HalfspaceRep, Polytope, vertex_enumeration


@dataclass(frozen=True)
class RootSet:
    roots: tuple  # sorted integer vectors
    semisimple: tuple
    unipotent: tuple
    ray_index: dict  # root -> index of the ray pairing to -1

    def tagged(self):
        """``[(tag, root)]`` with tag ``'S'`` or ``'U'``, roots sorted."""
        s = set(self.semisimple)
        return [("S" if m in s else "U", m) for m in self.roots]


def rays(p):
    """Primitive ray generators of the face fan of a fan polytope, sorted."""
    if p.lattice_tag != FAN:
        raise ValueError("rays are read from a fan polytope (lattice_tag='fan')")
    out = []
    for v in p.vertices:
        if not exact.is_primitive(v):
            raise PolytopeError(f"vertex {exact.format_vector(v)} is not primitive", "non_primitive_vertex")
        out.append(tuple(int(a) for a in v))
    return sorted(out)


def demazure_roots(ray_list):
    """All ``m`` with ``<m, v> = -1`` for exactly one ray and ``>= 0`` for the rest.

    Candidates are the lattice points of ``{m : <m, v> >= -1 for every ray}``,
    which contains every root.
    """
    ray_list = sorted(tuple(int(a) for a in v) for v in ray_list)
    hrep = HalfspaceRep(tuple(ray_list), (1,) * len(ray_list))
    try:
        verts = vertex_enumeration(hrep)
    except PolytopeError as e:
        raise PolytopeError("rays do not span a complete fan", "incomplete_fan") from e
    cand = Polytope(verts, "dual")
    found = {}
    for m in lattice_points(cand, 1):
        m = tuple(int(a) for a in m)
        pairs = [sum(a * b for a, b in zip(m, v)) for v in ray_list]
        minus = [i for i, x in enumerate(pairs) if x == -1]
        if len(minus) == 1 and all(x >= 0 for i, x in enumerate(pairs) if i != minus[0]):
            found[m] = minus[0]
    roots = tuple(sorted(found))
    semi = tuple(m for m in roots if tuple(-a for a in m) in found)
    uni = tuple(m for m in roots if m not in semi)
    return RootSet(roots, semi, uni, found)


def is_reductive(rs):
    return not rs.unipotent


def nill_pairing_criterion(dual_barycenter, rs):
    """Every root pairs to zero with the barycenter (or raw moment) of the fan polytope."""
    return all(exact.dot(dual_barycenter, m) == 0 for m in rs.roots)


def vertex_sum_sufficient(p):
    """The vertices of the fan polytope sum to zero (sufficient for reductivity)."""
    total = (0,) * p.dim
    for v in p.vertices:
        total = exact.add(total, v)
    return exact.is_zero(total)
