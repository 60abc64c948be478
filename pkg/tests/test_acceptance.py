"""Acceptance criteria 1-10, one test per criterion.

Run under pytest for the usual report plus a per-criterion PASS/FAIL
section, or directly with ``python tests/test_acceptance.py`` for just the
ten lines.
"""

from __future__ import annotations

import json
import random
import sys
import traceback
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import (  # noqa: E402
    SMALL_BUILTINS,
    TABLE_QUANDLES,
    brute_colorings,
    brute_endos,
    brute_in_degrees,
    catalog_diagrams,
)

from quiverlink import catalog, cli  # noqa: E402
from quiverlink.coloring import arc_classes, counting_invariant, enumerate_colorings  # noqa: E402
from quiverlink.polynomial import InDegreePolynomial  # noqa: E402
from quiverlink.quandle import (  # noqa: E402
    BUILTIN_NAMES,
    alexander,
    builtin,
    dihedral,
    enumerate_endos,
    verify_axioms,
)
from quiverlink.quiver import are_isomorphic, build_quiver, check_remark, full_quiver, in_degree_polynomial  # noqa: E402


def full_poly(name: str, quandle: str) -> str:
    D = catalog.get(name).diagram
    return str(in_degree_polynomial(full_quiver(D, builtin(quandle))))


def test_criterion_01_endomorphism_count():
    endos = [f.image for f in enumerate_endos(builtin("paper-ex1"))]
    assert len(endos) == 68
    assert (6, 6, 6, 5, 4, 2) in endos
    assert sorted(endos) == brute_endos(builtin("paper-ex1"))


def test_criterion_02_worked_quiver_example():
    D = catalog.get("L4a1").diagram
    Q = build_quiver(D, builtin("paper-ex2"), [(1, 1, 2)])
    assert str(in_degree_polynomial(Q)) == "5 + u + 2u^2 + u^4"


def test_criterion_03_separation_example():
    X = builtin("paper-4elt")
    S = [(2, 4, 2, 2)]
    A = catalog.get("6^{0,1}_1").diagram
    B = catalog.get("8_1").diagram
    assert counting_invariant(A, X) == 10
    assert counting_invariant(B, X) == 10
    assert are_isomorphic(build_quiver(A, X, S), build_quiver(B, X, S)) is False


# link -> {quandle index: printed polynomial}; only checksum-consistent cells
CRITERION_4 = {
    "0_1": {0: "3u^9", 1: "4u^16", 2: "4u^16"},
    "2^2_1": {0: "3u^9", 1: "4u^16", 2: "4u^16"},
    "6^{0,1}_1": {1: "4u^8 + 4u^24"},
    "9^{0,1}_1": {1: "8u^8 + 4u^16 + 4u^32"},
    "8_1": {2: "12u^12 + 4u^28"},
    "10_1": {2: "12u^12 + 4u^28"},
}


def test_criterion_04_table_rows():
    problems = []
    for name, cells in CRITERION_4.items():
        for k, want in cells.items():
            q = TABLE_QUANDLES[k]
            try:
                got = full_poly(name, q)
            except catalog.UnknownEntry:
                problems.append(f"{name} over {q}: no catalog diagram")
                continue
            if got != want:
                problems.append(f"{name} over {q}: computed {got}, expected {want}")
    assert not problems, "; ".join(problems)


def test_criterion_05_checksum_violations_flagged():
    result = cli.reproduce_table()
    row = next(r for r in result["rows"] if r["name"] == "8_1")
    cell = row["cells"][0]
    assert cell["quandle"] == "dihedral:3"
    assert cell["printed"] == "6u^6 + 3u^12"
    assert cell["printed_checksum"] == "violated"
    assert cell["status"] == "printed row fails checksum"
    assert cell["computed_checksum"] == "ok"

    # independent oracle: exhaustive colorings, every endo composed by hand
    D = catalog.get("8_1").diagram
    X = builtin("dihedral:3")
    cols = brute_colorings(D, X)
    endos = brute_endos(X)
    oracle = InDegreePolynomial(brute_in_degrees(cols, endos))
    assert cell["computed"] == str(oracle)
    assert oracle.derivative_at_one() == len(endos) * len(cols)
    assert str(oracle) == "6u^6 + 3u^15"

    # every printed cell that breaks the checksum is flagged, never reported as a match
    for r in result["rows"]:
        for c in r["cells"]:
            if c["printed_checksum"] == "violated":
                assert c["status"] != "match"
                assert "checksum" in c["status"]
            if c["computed"] is not None:
                assert c["computed_checksum"] == "ok"


def test_criterion_06_structural_identities():
    rng = random.Random(20240601)
    diagrams = catalog_diagrams()
    quandles = [builtin(q) for q in SMALL_BUILTINS]
    endo_cache = {X.name: enumerate_endos(X) for X in quandles}
    checked = 0
    for _ in range(120):
        label, D = rng.choice(diagrams)
        X = rng.choice(quandles)
        endos = endo_cache[X.name]
        S = rng.sample(endos, rng.randint(1, min(6, len(endos))))
        Q = build_quiver(D, X, S)
        assert all(d == len(S) for d in Q.out_degrees()), (label, X.name)
        assert sum(Q.in_degrees()) == len(S) * len(Q), (label, X.name)
        assert in_degree_polynomial(Q)(1) == counting_invariant(D, X), (label, X.name)
        checked += 1
    assert checked >= 100


def test_criterion_07_backtracking_matches_exhaustive():
    compared = 0
    for label, D in catalog_diagrams():
        k = len(arc_classes(D))
        for q in SMALL_BUILTINS:
            X = builtin(q)
            if X.n**k > 10**6:
                continue
            fast = {c.colors for c in enumerate_colorings(D, X)}
            assert fast == set(brute_colorings(D, X)), (label, q)
            compared += 1
    assert compared > 0


def test_criterion_08_remark_subquiver():
    failures = []
    for label, D in catalog_diagrams("surface-link"):
        for q in ("dihedral:3", "tetrahedral"):
            report = check_remark(D, builtin(q))
            if not report.ok:
                failures.append(f"{label}/{q}: {report.counterexample}")
    assert not failures


def test_criterion_09_invariance_across_diagrams():
    for name in catalog.names():
        entry = catalog.get(name)
        if len(entry.diagrams) < 2:
            continue
        for q in TABLE_QUANDLES:
            X = builtin(q)
            seen = {
                (counting_invariant(D, X), str(in_degree_polynomial(full_quiver(D, X))))
                for D in entry.diagrams
            }
            assert len(seen) == 1, (name, q, seen)


def test_criterion_10_quandle_constructors():
    names = ["dihedral:3", "dihedral:4", "dihedral:7", "trivial:3", "alexander:5:2", "alexander:7:3", "symplectic:3"]
    names += [n for n in BUILTIN_NAMES if "<" not in n]
    for name in names:
        assert verify_axioms(builtin(name)).valid, name
    for n in range(3, 9):
        assert alexander(n, n - 1) == dihedral(n)


def _main() -> int:
    tests = sorted((k, v) for k, v in globals().items() if k.startswith("test_criterion_"))
    failed = 0
    for name, fn in tests:
        num = int(name.split("_")[2])
        try:
            fn()
            print(f"criterion {num:2d}: PASS")
        except Exception as exc:  # report and continue with the others
            failed += 1
            detail = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
            print(f"criterion {num:2d}: FAIL ({detail})")
            if "-v" in sys.argv:
                traceback.print_exc()
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(_main())
