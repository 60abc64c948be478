import pytest

from conftest import TABLE_QUANDLES
from quiverlink import catalog
from quiverlink import diagram as dg
from quiverlink.coloring import counting_invariant
from quiverlink.polynomial import InDegreePolynomial
from quiverlink.quandle import builtin
from quiverlink.quiver import full_quiver, in_degree_polynomial

SURFACE_NAMES = catalog.names("surface-link")


def test_listing_and_kinds():
    names = catalog.list()
    assert {"0_1", "3_1", "8_1", "L4a1"} <= set(names)
    assert set(catalog.names("classical")) == {"3_1", "L4a1"}
    assert not set(SURFACE_NAMES) & set(catalog.names("classical"))


def test_unknown_name_lists_known_entries():
    with pytest.raises(catalog.UnknownEntry) as info:
        catalog.get("11_7")
    assert "0_1" in info.value.known
    assert "0_1" in str(info.value)


@pytest.mark.parametrize(
    "spelling,name",
    [("6^{0,1}₁", "6^{0,1}_1"), ("6^0,1_1", "6^{0,1}_1"), ("8₁", "8_1"), ("2²₁", "2^2_1"), ("L4A1", "L4a1")],
)
def test_name_normalisation(spelling, name):
    assert catalog.get(spelling).name == name


def test_aliases():
    assert catalog.get("trefoil").name == "3_1"
    assert catalog.get("2^1_1").name == "2^2_1"


def test_documented_examples():
    assert catalog.get("0_1").diagram.nodes == (dg.Circle(1),)
    trefoil = catalog.get("3_1")
    assert trefoil.kind == "classical" and len(trefoil.diagram.crossings) == 3
    assert dg.ch_number(catalog.get("8_1").diagrams[0]) == 8


@pytest.mark.parametrize("name", SURFACE_NAMES)
def test_first_diagram_ch_matches_label(name):
    entry = catalog.get(name)
    assert dg.ch_number(entry.diagram) == entry.nominal_ch


@pytest.mark.parametrize("name", SURFACE_NAMES)
def test_never_certified_inadmissible(name):
    for D in catalog.get(name).diagrams:
        assert dg.admissibility_report(D).status != "certified_inadmissible"


@pytest.mark.parametrize("name", catalog.names())
def test_every_entry_has_an_alternate(name):
    assert len(catalog.get(name).diagrams) >= 2


@pytest.mark.parametrize("name", catalog.names())
def test_alternates_share_invariants(name):
    entry = catalog.get(name)
    for q in TABLE_QUANDLES:
        X = builtin(q)
        values = {(counting_invariant(D, X), str(in_degree_polynomial(full_quiver(D, X)))) for D in entry.diagrams}
        assert len(values) == 1, (name, q, values)


def test_surface_types_follow_labels():
    # superscript lists genera, one per component; no superscript means one sphere
    expected_chi = {"0_1": 2, "2^2_1": 0, "6^{0,1}_1": 2, "8_1": 2, "8^{1,1}_1": 0, "10^1_1": 0, "10^{0,0,1}_1": 4}
    for name, chi in expected_chi.items():
        if name in SURFACE_NAMES:
            assert dg.euler_characteristic(catalog.get(name).diagram) == chi, name


def test_published_table_shape():
    rows = catalog.published_table()
    assert len(rows) == 15
    assert len({r.name for r in rows}) == 15
    for r in rows:
        assert len(r.polys) == 3
        assert all(isinstance(p, InDegreePolynomial) for p in r.polys)


def test_custom_catalog_directory(tmp_path, monkeypatch):
    (tmp_path / "x.mgd").write_text("#! name: 4_9\n#! kind: surface-link\n\ndiagram 4_9\ncircle 1\n")
    monkeypatch.setenv(catalog.ENV_VAR, str(tmp_path))
    try:
        assert catalog.names() == ["4_9"]
    finally:
        monkeypatch.delenv(catalog.ENV_VAR)
    assert "4_9" not in catalog.names()


def test_surface_entries_state_their_provenance():
    for name in SURFACE_NAMES:
        assert "invariants" in catalog.get(name).provenance, name
    assert catalog.get("3_1").provenance == ""
