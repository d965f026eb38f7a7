from fractions import Fraction as F

import pytest

from helpers import cyclic_order, delaunay_volume_moment, fan, moment, random_unimodular, rng, shoelace
from toricstab import catalog
from toricstab.errors import NotReflexiveError, PolytopeError
from toricstab.polytope import (
    DUAL,
    FAN,
    HalfspaceRep,
    Polytope,
    boundary_ray_point,
    dual_polytope,
    facet_representation,
    is_reflexive,
    is_smooth_fano,
    triangulate,
    unimodular_image,
    vertex_enumeration,
)

P2_DUAL = [(-1, -1), (-1, 2), (2, -1)]
SQUARE = [(1, 1), (1, -1), (-1, 1), (-1, -1)]
CROSS = [(1, 0), (0, 1), (-1, 0), (0, -1)]


def verts(*vs):
    return sorted(tuple(F(a) for a in v) for v in vs)


def test_dual_of_p2():
    h, d = dual_polytope(Polytope([(1, 0), (0, 1), (-1, -1)]))
    assert list(d.vertices) == verts(*P2_DUAL)
    assert d.lattice_tag == DUAL
    assert h.is_anticanonical()


def test_dual_of_square_is_cross():
    assert list(Polytope(SQUARE).dual().vertices) == verts(*CROSS)


@pytest.mark.parametrize("e", catalog.entries(), ids=lambda e: e.name)
def test_double_dual(e):
    p = e.fan_polytope()
    assert p.dual().dual() == p


def test_vertex_enumeration_examples():
    h = HalfspaceRep([(1, 0), (0, 1), (-1, -1)], (1, 1, 1))
    assert vertex_enumeration(h) == verts(*P2_DUAL)
    box = HalfspaceRep([(1, 0), (-1, 0), (0, 1), (0, -1)], (1, 1, 1, 1))
    assert vertex_enumeration(box) == verts(*SQUARE)
    bl = HalfspaceRep([(1, 0), (1, 1), (0, 1), (-1, -1)], (1, 1, 1, 1))
    assert vertex_enumeration(bl) == verts((-1, 0), (0, -1), (2, -1), (-1, 2))


def test_vertex_enumeration_unbounded():
    # the five printed E4 normals leave a recession direction
    with pytest.raises(PolytopeError) as err:
        vertex_enumeration(catalog.e4_given_normals())
    assert err.value.code == "unbounded"
    with pytest.raises(PolytopeError):
        vertex_enumeration(HalfspaceRep([(1, 0), (0, 1)], (1, 1)))


def test_facet_representation():
    h = facet_representation(Polytope(CROSS))
    assert sorted(h.normals) == verts((1, 1), (1, -1), (-1, 1), (-1, -1))
    assert set(h.offsets) == {1}
    h = facet_representation(Polytope(P2_DUAL, DUAL))
    assert sorted(h.normals) == verts((1, 0), (0, 1), (-1, -1))
    h = facet_representation(Polytope(SQUARE))
    assert sorted(h.normals) == verts((1, 0), (-1, 0), (0, 1), (0, -1))
    assert h == Polytope(SQUARE).facets


def test_is_reflexive():
    assert is_reflexive(Polytope([(1, 0), (0, 1), (-1, -1)]))
    assert is_reflexive(Polytope(SQUARE))
    big = Polytope([(2, 0), (0, 2), (-2, 0), (0, -2)], DUAL)
    assert not is_reflexive(big)
    h, d = dual_polytope(big)
    assert d is None
    assert vertex_enumeration(h) == verts(*[(F(a, 2), F(b, 2)) for a in (1, -1) for b in (1, -1)])
    with pytest.raises(NotReflexiveError):
        big.dual()


def test_is_smooth_fano():
    assert is_smooth_fano(Polytope([(1, 0), (0, 1), (-1, -1)]))
    assert is_smooth_fano(fan("F2"))
    assert is_smooth_fano(fan("E4"))
    assert not is_smooth_fano(Polytope(SQUARE))


def test_weighted_projective_plane_not_smooth():
    p = Polytope([(1, 0), (0, 1), (-1, -2)])
    assert is_reflexive(p)
    assert not is_smooth_fano(p)
    with pytest.raises(NotReflexiveError):
        is_smooth_fano(Polytope([(1, 0), (0, 1), (-1, -3)]))
    # the facet spanned by (1,0) and (-1,-2) has determinant -2
    from toricstab.exact import determinant

    assert determinant([(1, 0), (-1, -2)]) == -2


def test_constructor_errors():
    cases = {
        "origin_not_interior": [(0, 0), (1, 0), (0, 1)],
        "duplicate_vertex": [(1, 0), (1, 0), (0, 1), (-1, -1)],
        "redundant_vertex": [(1, 0), (0, 1), (-1, -1), (0, 0)],
        "non_primitive_vertex": [(2, 0), (0, 1), (-1, -1)],
        "not_full_dimensional": [(1, 0, 0), (-1, 0, 0), (0, 1, 0), (0, -1, 0)],
    }
    for code, vs in cases.items():
        with pytest.raises(PolytopeError) as err:
            Polytope(vs)
        assert err.value.code == code, code


def test_triangulate_examples():
    tri = [(0, 0), (3, 0), (0, 2)]
    cells = triangulate(tri)
    assert len(cells) == 1 and cells[0].volume() == 3
    cells = triangulate(SQUARE, apex=(0, 0))
    assert len(cells) == 4 and all(c.volume() == 1 for c in cells)
    bl = [(-1, 0), (0, -1), (2, -1), (-1, 2)]
    cells = triangulate(bl)
    assert sorted(c.volume() for c in cells) == [1, 3]
    assert all((F(-1), F(0)) in c.vertices for c in cells)


def test_triangulate_degenerate():
    with pytest.raises(PolytopeError):
        triangulate([(0, 0), (1, 1), (2, 2)])


def test_volume_barycenter_examples():
    d = Polytope(P2_DUAL, DUAL)
    assert d.volume() == F(9, 2) and d.barycenter() == (0, 0)
    bl = moment("Bl1P2")
    assert bl.volume() == 4 and bl.barycenter() == (F(1, 12), F(1, 12))


def test_e4_moment():
    d = moment("E4")
    assert d.volume() == F(20, 3)
    # the integral of x equals the vector printed as the E4 barycenter
    assert d.moment() == (F(5, 24), F(7, 8), F(5, 12))
    assert d.barycenter() == (F(1, 32), F(21, 160), F(1, 16))


@pytest.mark.parametrize("e", catalog.entries(), ids=lambda e: e.name)
@pytest.mark.parametrize("side", ["fan", "dual"])
def test_volume_moment_against_delaunay(e, side):
    p = e.fan_polytope() if side == "fan" else e.moment_polytope()
    vol, mom = delaunay_volume_moment(p.vertices)
    assert p.volume() == vol
    assert p.moment() == mom


@pytest.mark.parametrize("e", [e for e in catalog.entries() if len(e.fan_vertices[0]) == 2], ids=lambda e: e.name)
def test_volume_moment_against_shoelace(e):
    for p in (e.fan_polytope(), e.moment_polytope()):
        area, mom = shoelace(cyclic_order(p.vertices))
        assert p.volume() == area and p.moment() == mom


def test_boundary_ray_point_examples():
    assert boundary_ray_point(Polytope(SQUARE, DUAL), (1, 0)) == (1, 0)
    bl = moment("Bl1P2")
    assert boundary_ray_point(bl, tuple(-a for a in bl.barycenter())) == (F(-1, 2), F(-1, 2))
    e4 = moment("E4")
    q = boundary_ray_point(e4, tuple(-a for a in e4.barycenter()))
    assert q == (F(-5, 21), F(-1), F(-10, 21))
    with pytest.raises(ValueError):
        boundary_ray_point(bl, (0, 0))


def test_facet_incidence():
    p = fan("E4")
    for (v, c), idx in zip(p.facets, p.facet_vertices):
        assert all(sum(a * b for a, b in zip(p.vertices[i], v)) == -c for i in idx)
        assert len(idx) >= p.dim


@pytest.mark.parametrize("e", catalog.entries(), ids=lambda e: e.name)
def test_unimodular_equivariance(e):
    r = rng(hash(e.name) % 1000)
    p = e.fan_polytope()
    for _ in range(3):
        u = random_unimodular(p.dim, r)
        img = unimodular_image(p, u)
        assert img.dual() == unimodular_image(p.dual(), u)
        assert img.volume() == p.volume()
        assert is_reflexive(img) == is_reflexive(p)


@pytest.mark.parametrize("e", catalog.entries(), ids=lambda e: e.name)
def test_dual_matches_validated_construction(e):
    from toricstab.exact import is_integral
    from toricstab.polytope import dual_halfspaces

    p = e.fan_polytope()
    d = p.dual()
    full = Polytope(d.vertices, DUAL)
    assert full.facets == d.facets and full.facet_vertices == d.facet_vertices
    enumerated = vertex_enumeration(dual_halfspaces(p))
    assert enumerated == list(d.vertices)
    assert is_reflexive(p) == all(is_integral(w) for w in enumerated)


def test_reflexive_agrees_with_enumeration_on_non_reflexive():
    from toricstab.exact import is_integral
    from toricstab.polytope import dual_halfspaces

    for vs in ([(1, 0), (0, 1), (-1, -3)], [(1, 0), (0, 1), (-2, -3)], [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, -1, -2)]):
        p = Polytope(vs)
        assert is_reflexive(p) == all(is_integral(w) for w in vertex_enumeration(dual_halfspaces(p)))
