"""F2: roots, reductivity and the pairing test with the fan-side integral."""

from toricstab import catalog, demazure_roots, is_reductive, nill_pairing_criterion, rays
from toricstab.exact import format_vector

p = catalog.entry("F2").fan_polytope()
rs = demazure_roots(rays(p))
print("rays:", [format_vector(v) for v in rays(p)])
print("roots:", [f"{t}{format_vector(m)}" for t, m in rs.tagged()])
print("reductive:", is_reductive(rs))

# the pairing verdict does not depend on normalizing the integral
print("integral of y over P:", format_vector(p.moment()), "volume", p.volume())
print("barycenter of P:", format_vector(p.barycenter()))
print("pairing test:", nill_pairing_criterion(p.moment(), rs))

d = p.dual()
print("K-polystable:", all(a == 0 for a in d.moment()))
