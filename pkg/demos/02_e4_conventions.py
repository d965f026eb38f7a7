"""The toric Fano 3-fold E4 and the two barycenter conventions.

The five normals usually quoted for E4 do not bound a polytope on their own:
the region recedes along (0,-1,-1).  Adding the rays (0,-1,0) and (0,0,-1)
completes the fan; its Demazure roots then match the expected root set.

The published barycenter (5/24, 7/8, 5/12) is the unnormalized integral of x
over the moment polytope (volume 20/3), and the value 8/15 follows from it.
The normalized barycenter gives delta = R = 160/181 instead.
"""

from toricstab import HalfspaceRep, PolytopeError, catalog, vertex_enumeration
from toricstab import delta_invariant, demazure_roots, greatest_ricci_lower_bound, rays
from toricstab.exact import format_vector

try:
    vertex_enumeration(HalfspaceRep(catalog.entry("E4").given_normals, (1,) * 5))
except PolytopeError as e:
    print("five normals:", e.code)

e4 = catalog.entry("E4")
fan = e4.fan_polytope()
d = fan.dual()
rs = demazure_roots(rays(fan))
print("roots:", [f"{t}{format_vector(m)}" for t, m in rs.tagged()])

print("volume:", d.volume())
print("integral of x:", format_vector(d.moment()))
print("barycenter:  ", format_vector(d.barycenter()))

for name, point in (("barycenter", d.barycenter()), ("integral of x", d.moment())):
    r = greatest_ricci_lower_bound(d, point)
    print(f"with the {name}: delta = {delta_invariant(d.facets, point)}, R = {r.value}, "
          f"Q = {format_vector(r.q_point)}")
