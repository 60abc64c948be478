import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL_BUILTINS, brute_colorings, catalog_diagrams
from quiverlink import catalog
from quiverlink import diagram as dg
from quiverlink.coloring import (
    arc_classes,
    check_coloring,
    compose_coloring,
    counting_invariant,
    enumerate_colorings,
    induce_on_resolution,
)
from quiverlink.quandle import builtin, dihedral, enumerate_endos, trivial

SMALL = [(label, D) for label, D in catalog_diagrams() if len(arc_classes(D)) <= 8]


def test_trefoil_fox_colorings():
    D = catalog.get("3_1").diagram
    assert counting_invariant(D, dihedral(3)) == 9
    assert counting_invariant(D, dihedral(5)) == 5


def test_trivial_quandle_counts_components():
    # every arc of a component must share a color
    for name in ("3_1", "L4a1", "0_1", "6^{0,1}_1"):
        D = catalog.get(name).diagram
        comps = dg.component_count(D) if name in ("3_1", "L4a1") else dg.surface_components(D)
        assert counting_invariant(D, trivial(3)) == 3**comps, name


def test_constant_colorings_always_present():
    X = builtin("tetrahedral")
    for label, D in catalog_diagrams():
        cols = {c.colors for c in enumerate_colorings(D, X)}
        k = len(arc_classes(D))
        for x in X.elements():
            assert (x,) * k in cols, label


def test_colorings_are_sorted_and_valid():
    X = builtin("dihedral:4")
    for label, D in SMALL:
        cols = enumerate_colorings(D, X)
        assert [c.colors for c in cols] == sorted(c.colors for c in cols)
        for c in cols:
            assert check_coloring(D, X, c.colors), label


def test_check_coloring_explains_failure():
    D = catalog.get("3_1").diagram
    k = len(arc_classes(D))
    bad = [1] * (k - 1) + [2]
    result = check_coloring(D, dihedral(3), bad)
    assert not result
    assert result.node is not None and result.message
    with pytest.raises(ValueError):
        check_coloring(D, dihedral(3), [1] * (k + 1))


@pytest.mark.parametrize("q", ["dihedral:3", "dihedral:4", "paper-ex2"])
def test_backtracking_equals_brute_force_small(q):
    X = builtin(q)
    for label, D in SMALL:
        assert {c.colors for c in enumerate_colorings(D, X)} == set(brute_colorings(D, X)), label


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(catalog_diagrams()), st.sampled_from(SMALL_BUILTINS), st.data())
def test_endomorphisms_map_colorings_to_colorings(item, q, data):
    label, D = item
    X = builtin(q)
    cols = enumerate_colorings(D, X)
    if not cols:
        return
    c = data.draw(st.sampled_from(cols))
    phi = data.draw(st.sampled_from(enumerate_endos(X)))
    image = compose_coloring(phi, c)
    assert check_coloring(D, X, image.colors)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(catalog_diagrams("surface-link")), st.sampled_from(["dihedral:3", "tetrahedral"]), st.data())
def test_restriction_to_resolutions_is_a_coloring(item, q, data):
    label, D = item
    X = builtin(q)
    c = data.draw(st.sampled_from(enumerate_colorings(D, X)))
    for sign in "+-":
        R = dg.resolve(D, sign)
        r = induce_on_resolution(D, c, sign)
        assert check_coloring(R, X, r.colors)
