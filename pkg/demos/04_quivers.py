"""Coloring quivers, their in-degree polynomials, and telling two surfaces apart."""
from quiverlink import catalog
from quiverlink.quandle import builtin
from quiverlink.quiver import are_isomorphic, build_quiver, export_dot, full_quiver, in_degree_polynomial

X = builtin("paper-ex2")
Q = build_quiver(catalog.get("L4a1").diagram, X, [(1, 1, 2)])
print("L4a1, one endomorphism:", in_degree_polynomial(Q))
print(export_dot(Q, "L4a1"))

# Same number of colorings, different quivers.
Y = builtin("paper-4elt")
A = build_quiver(catalog.get("6^{0,1}_1").diagram, Y, [(2, 4, 2, 2)])
B = build_quiver(catalog.get("8_1").diagram, Y, [(2, 4, 2, 2)])
print(f"6^(0,1)_1: {len(A)} colorings, 8_1: {len(B)} colorings, isomorphic quivers: {are_isomorphic(A, B)}")
print("  ", in_degree_polynomial(A), "vs", in_degree_polynomial(B))

for name in ("0_1", "8_1", "10^{0,0,1}_1"):
    P = in_degree_polynomial(full_quiver(catalog.get(name).diagram, builtin("dihedral:4")))
    print(f"full quiver over dihedral(4), {name}: {P}")
