import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import SMALL_BUILTINS, brute_endos
from quiverlink.quandle import (
    Quandle,
    QuandleAxiomError,
    QuandleFormatError,
    alexander,
    builtin,
    compose,
    conjugation,
    cyclic_group,
    dihedral,
    endomorphism,
    enumerate_endos,
    enumerate_homs,
    format_quandle,
    identity_map,
    load_quandle,
    parse_quandles,
    symmetric_group,
    verify_axioms,
)


def test_dihedral_three_table():
    assert dihedral(3).rows() == [[1, 3, 2], [3, 2, 1], [2, 1, 3]]


def test_dihedral_rule_matches_formula():
    for n in range(1, 9):
        X = dihedral(n)
        for x in X.elements():
            for y in X.elements():
                assert (X.op(x, y) - (2 * y - x)) % n == 0


@pytest.mark.parametrize("name", SMALL_BUILTINS + ("symplectic:3", "trivial:5", "dihedral:8"))
def test_builtins_are_quandles(name):
    assert verify_axioms(builtin(name)).valid


def test_conjugation_of_s3_is_a_quandle():
    X = conjugation(symmetric_group(3))
    assert X.n == 6 and verify_axioms(X).valid


def test_conjugation_of_abelian_group_is_trivial():
    assert conjugation(cyclic_group(5)).is_trivial()


@pytest.mark.parametrize("n", range(3, 9))
def test_alexander_minus_one_is_dihedral(n):
    assert alexander(n, n - 1) == dihedral(n)


def test_alexander_rejects_non_unit():
    with pytest.raises(ValueError):
        alexander(6, 2)


def test_axiom_failures_are_reported_with_witnesses():
    report = verify_axioms([[1, 1], [1, 2]])
    assert not report.valid
    assert 2 in report.failed_axioms()
    bad_idem = verify_axioms([[2, 1], [1, 2]])
    assert 1 in bad_idem.failed_axioms()
    assert bad_idem.violations[0].witness == (1,)


def test_non_distributive_table_fails_only_axiom_three():
    # idempotent, every column a permutation, but not self-distributive
    report = verify_axioms([[1, 1, 1, 1], [2, 2, 4, 3], [3, 3, 3, 2], [4, 4, 2, 4]])
    assert report.failed_axioms() == {3}


def test_from_rows_raises_axiom_error():
    with pytest.raises(QuandleAxiomError) as info:
        Quandle.from_rows([[1, 1], [1, 2]])
    assert not info.value.report.valid


@pytest.mark.parametrize(
    "rows",
    [[], [[1, 2]], [[1, 2], [3, 1]], [[1.5, 1], [1, 2]], [[0, 1], [1, 2]]],
)
def test_malformed_tables(rows):
    with pytest.raises(QuandleFormatError):
        verify_axioms(rows)


def test_text_round_trip(tmp_path):
    X = builtin("paper-ex1")
    text = format_quandle(X)
    again = parse_quandles(text)
    assert list(again.values())[0] == X
    path = tmp_path / "q.txt"
    path.write_text(text + format_quandle(dihedral(5)))
    assert load_quandle(str(path)) == X


def test_load_quandle_unknown():
    with pytest.raises(KeyError):
        load_quandle("no-such-quandle")


@pytest.mark.parametrize("name", SMALL_BUILTINS)
def test_endos_match_brute_force(name):
    X = builtin(name)
    assert [f.image for f in enumerate_endos(X)] == brute_endos(X)


def test_paper_six_element_endomorphisms():
    endos = enumerate_endos(builtin("paper-ex1"))
    assert len(endos) == 68
    assert (6, 6, 6, 5, 4, 2) in {f.image for f in endos}


def test_dihedral_three_endos():
    assert len(enumerate_endos(dihedral(3))) == 9


def test_homs_between_different_quandles():
    homs = enumerate_homs(dihedral(3), dihedral(6))
    for f in homs:
        assert f.is_homomorphism()
    # constants always exist
    assert sum(len(set(f.image)) == 1 for f in homs) == 6


def test_endomorphism_constructor_checks():
    X = builtin("paper-ex2")
    assert endomorphism(X, [1, 1, 2]).image == (1, 1, 2)
    with pytest.raises(ValueError):
        endomorphism(dihedral(3), [1, 2, 2])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SMALL_BUILTINS), st.data())
def test_endomorphisms_closed_under_composition(name, data):
    X = builtin(name)
    endos = enumerate_endos(X)
    f = data.draw(st.sampled_from(endos))
    g = data.draw(st.sampled_from(endos))
    h = compose(g, f)
    assert h.is_homomorphism()
    assert h in endos
    assert compose(identity_map(X), f) == f


@settings(max_examples=60, deadline=None)
@given(st.integers(2, 12), st.integers(1, 11))
def test_alexander_is_a_quandle(n, t):
    if np.gcd(t, n) != 1:
        with pytest.raises(ValueError):
            alexander(n, t)
        return
    assert verify_axioms(alexander(n, t)).valid
