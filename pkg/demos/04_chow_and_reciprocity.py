"""Ehrhart data, the Chow condition and evaluation at t = -1."""

from toricstab import catalog, chow_condition_asymptotic, reciprocity_check, theorem_chain
from toricstab.exact import format_vector
from toricstab.stability import ChowData

for name in ("P2", "Bl1P2", "E4"):
    d = catalog.entry(name).moment_polytope()
    data = ChowData.of(d)
    print(f"{name}: E(t) coefficients {[str(c) for c in data.ehrhart.coefficients]}")
    lhs, rhs = data.sides(1)
    print(f"  s(1) = {format_vector(lhs)}, E(1) b = {format_vector(rhs)}")
    print("  asymptotic condition:", chow_condition_asymptotic(d, data))
    rep = reciprocity_check(d, data.ehrhart, data.lattice_sum)
    print(f"  E(-1) = {rep.ehrhart_at_minus_one}, s(-1) = {format_vector(rep.sum_at_minus_one)}, "
          f"interior counts agree: {rep.ok}")
    chain = theorem_chain(d, data)
    print("  Chow => zero barycenter:", chain.implication, "| route via t = -1 agrees:", chain.proof_route_agrees)
