"""Build the small quandles used throughout and look at their endomorphism monoids."""
from quiverlink.quandle import alexander, builtin, dihedral, enumerate_endos, verify_axioms

R3 = dihedral(3)
print("dihedral(3) operation table (row x, column y, entry x > y):")
for row in R3.rows():
    print("  ", row)

# The Alexander quandle Z_n[t]/(t+1) is the dihedral quandle again.
for n in range(3, 9):
    assert alexander(n, n - 1) == dihedral(n)
print("alexander(n, n-1) == dihedral(n) for n = 3..8")

for name in ("dihedral:3", "dihedral:4", "tetrahedral", "paper-ex1"):
    X = builtin(name)
    report = verify_axioms(X)
    print(f"{name:12s} order {X.n}  axioms ok: {report.valid}  |End| = {len(enumerate_endos(X))}")
