"""Marked graph diagrams: parse one, resolve its vertices, read off the surface."""
from quiverlink import catalog
from quiverlink import diagram as dg

# A circle pinched against itself: one saddle that splits it into two circles.
D = dg.parse("diagram pinch\nm 1 2 2 1\n")
for sign in "-+":
    print(f"L{sign}: {dg.component_count(dg.resolve(D, sign))} component(s)")
print("Euler characteristic:", dg.euler_characteristic(D), "(a sphere)")

for name in ("2^2_1", "6^{0,1}_1", "8_1", "10^{0,0,1}_1"):
    E = catalog.get(name).diagram
    status = dg.admissibility_report(E).status
    print(f"{name:14s} ch={dg.ch_number(E):2d} components={dg.surface_components(E)} "
          f"chi={dg.euler_characteristic(E)} planar={dg.is_planar(E)} {status}")

print()
print(dg.serialize(catalog.get("3_1").diagram))
