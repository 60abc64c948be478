"""Quandle colorings by backtracking, checked against exhaustive filtering."""
import itertools

from quiverlink import catalog
from quiverlink.coloring import arc_classes, check_coloring, counting_invariant, enumerate_colorings
from quiverlink.quandle import builtin

X = builtin("dihedral:3")
D = catalog.get("8_1").diagram
cols = enumerate_colorings(D, X)
print("8_1 has", len(cols), "dihedral(3) colorings; first three:")
for c in cols[:3]:
    print("  ", c.colors)

trefoil = catalog.get("3_1").diagram
k = len(arc_classes(trefoil))
brute = {c for c in itertools.product(X.elements(), repeat=k) if check_coloring(trefoil, X, c)}
assert brute == {c.colors for c in enumerate_colorings(trefoil, X)}
print(f"trefoil: exhaustive search over {X.n}^{k} assignments agrees, {len(brute)} colorings")

for q in ("dihedral:3", "dihedral:4", "tetrahedral"):
    row = {name: counting_invariant(catalog.get(name).diagram, builtin(q)) for name in ("0_1", "8_1", "10_1", "10_2")}
    print(f"{q:12s}", row)
