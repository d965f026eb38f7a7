"""The projective plane blown up at a point.

Build the moment polytope from its four facet normals, then read off the
barycenter, the boundary point Q, delta and the greatest Ricci lower bound.
"""

from toricstab import HalfspaceRep, Polytope, delta_invariant, facet_selector, greatest_ricci_lower_bound
from toricstab.exact import format_vector

normals = [(1, 0), (1, 1), (0, 1), (-1, -1)]
delta_p = Polytope.from_facets(HalfspaceRep(normals, (1,) * 4))

print("vertices:", [format_vector(v) for v in delta_p.vertices])
print("volume:", delta_p.volume())
b = delta_p.barycenter()
print("barycenter:", format_vector(b))

r = greatest_ricci_lower_bound(delta_p)
print("Q =", format_vector(r.q_point), "= c*b with c =", r.scale)
print("R =", r.value, " delta =", delta_invariant(delta_p.facets, b))

# Q sits on the facet whose normal maximizes <b, v>
for i in facet_selector(delta_p):
    print("Q lies on the facet with normal", format_vector(delta_p.facets.normals[i]))
