import warnings

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL_BUILTINS, brute_colorings, brute_endos, brute_in_degrees, catalog_diagrams
from quiverlink import catalog
from quiverlink.polynomial import InDegreePolynomial
from quiverlink.quandle import builtin, enumerate_endos
from quiverlink.quiver import (
    Quiver,
    QuiverTooLarge,
    are_isomorphic,
    build_quiver,
    check_remark,
    export_dot,
    export_json,
    full_quiver,
    import_json,
    in_degree_polynomial,
)


def relabel(Q: Quiver, perm) -> Quiver:
    """Same quiver with vertex i renamed perm[i] (vertex names become dummies)."""
    n = len(Q)
    inv = {p: i for i, p in enumerate(perm)}
    verts = tuple((inv[i] + 1000,) for i in range(n))
    edges = tuple(sorted((perm[s], perm[t], k) for s, t, k in Q.edges))
    return Quiver(verts, edges, Q.endos)


def test_worked_example_polynomial():
    Q = build_quiver(catalog.get("L4a1").diagram, builtin("paper-ex2"), [(1, 1, 2)])
    assert len(Q) == 9
    assert str(in_degree_polynomial(Q)) == "5 + u + 2u^2 + u^4"


def test_full_quiver_matches_exhaustive_composition():
    for name in ("3_1", "L4a1", "6^{0,1}_1", "2^2_1"):
        D = catalog.get(name).diagram
        for q in ("dihedral:3", "dihedral:4", "tetrahedral"):
            X = builtin(q)
            oracle = InDegreePolynomial(brute_in_degrees(brute_colorings(D, X), brute_endos(X)))
            assert in_degree_polynomial(full_quiver(D, X)) == oracle, (name, q)


def test_repeated_endomorphisms_warn_and_collapse():
    X = builtin("dihedral:3")
    D = catalog.get("3_1").diagram
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        Q = build_quiver(D, X, [(1, 2, 3), (1, 2, 3)])
    assert caught
    assert all(d == 1 for d in Q.out_degrees())


def test_non_endomorphism_rejected():
    with pytest.raises(ValueError):
        build_quiver(catalog.get("3_1").diagram, builtin("dihedral:3"), [(1, 2, 2)])


def test_isomorphism_basics():
    X = builtin("paper-4elt")
    S = [(2, 4, 2, 2)]
    A = build_quiver(catalog.get("6^{0,1}_1").diagram, X, S)
    B = build_quiver(catalog.get("8_1").diagram, X, S)
    assert len(A) == len(B) == 10
    assert are_isomorphic(A, A)
    assert not are_isomorphic(A, B)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(catalog_diagrams()), st.sampled_from(["dihedral:3", "paper-4elt", "paper-ex2"]), st.randoms(use_true_random=False))
def test_isomorphism_invariant_under_relabelling(item, q, rnd):
    label, D = item
    X = builtin(q)
    endos = enumerate_endos(X)
    S = rnd.sample(endos, min(2, len(endos)))
    Q = build_quiver(D, X, S)
    if len(Q) > 64:
        return
    perm = list(range(len(Q)))
    rnd.shuffle(perm)
    assert are_isomorphic(Q, relabel(Q, perm))


def test_isomorphism_size_cap():
    D = catalog.get("10^{0,0,1}_1").diagram
    Q = full_quiver(D, builtin("dihedral:4"))
    with pytest.raises(QuiverTooLarge):
        are_isomorphic(Q, Q, max_vertices=4)


def test_different_sizes_never_isomorphic():
    X = builtin("dihedral:3")
    A = full_quiver(catalog.get("0_1").diagram, X)
    B = full_quiver(catalog.get("8_1").diagram, X)
    assert not are_isomorphic(A, B)


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(catalog_diagrams()), st.sampled_from(SMALL_BUILTINS), st.randoms(use_true_random=False))
def test_degree_identities(item, q, rnd):
    label, D = item
    X = builtin(q)
    endos = enumerate_endos(X)
    S = rnd.sample(endos, rnd.randint(1, min(5, len(endos))))
    Q = build_quiver(D, X, S)
    assert set(Q.out_degrees()) <= {len(S)}
    assert sum(Q.in_degrees()) == len(S) * len(Q)
    P = in_degree_polynomial(Q)
    assert P(1) == len(Q)
    assert P.derivative_at_one() == len(S) * len(Q)


def test_remark_holds_on_catalog():
    for label, D in catalog_diagrams("surface-link"):
        report = check_remark(D, builtin("dihedral:3"))
        assert report.ok, (label, report.counterexample)
        assert report.sizes["D"] <= min(report.sizes["+"], report.sizes["-"])


def test_json_round_trip_and_dot():
    Q = full_quiver(catalog.get("3_1").diagram, builtin("dihedral:3"))
    assert import_json(export_json(Q)) == Q
    dot = export_dot(Q, "trefoil")
    assert dot.startswith('digraph "trefoil"')
    assert dot.count("->") == len({(s, t) for s, t, _ in Q.edges})


def test_json_rejects_inconsistent_multiplicity():
    Q = full_quiver(catalog.get("3_1").diagram, builtin("dihedral:3"))
    text = export_json(Q).replace('"multiplicity": 1', '"multiplicity": 7', 1)
    with pytest.raises(ValueError):
        import_json(text)
