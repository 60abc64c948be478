import pytest
from hypothesis import given
from hypothesis import strategies as st

from quiverlink.polynomial import InDegreePolynomial


def test_canonical_printing():
    assert str(InDegreePolynomial.from_degrees([0] * 5 + [1, 2, 2, 4])) == "5 + u + 2u^2 + u^4"
    assert str(InDegreePolynomial()) == "0"
    assert str(InDegreePolynomial({12: 3, 6: 6})) == "6u^6 + 3u^12"


@pytest.mark.parametrize(
    "text,terms",
    [
        ("5+u+2u²+u⁴", {0: 5, 1: 1, 2: 2, 4: 1}),
        ("6u^6 + 3u^12", {6: 6, 12: 3}),
        ("u^{16}", {16: 1}),
        ("0", {}),
        ("u + u", {1: 2}),
    ],
)
def test_parse(text, terms):
    assert InDegreePolynomial.parse(text).terms == terms


@pytest.mark.parametrize("bad", ["x^2", "3v", "u^", "+"])
def test_parse_rejects(bad):
    with pytest.raises(ValueError):
        InDegreePolynomial.parse(bad)


def test_evaluation_and_derivative():
    p = InDegreePolynomial.parse("6u^6 + 3u^12")
    assert p(1) == 9
    assert p.derivative_at_one() == 72


@given(st.lists(st.integers(0, 40), max_size=60))
def test_round_trip_and_identities(degrees):
    p = InDegreePolynomial.from_degrees(degrees)
    assert InDegreePolynomial.parse(str(p)) == p
    assert p(1) == len(degrees)
    assert p.derivative_at_one() == sum(degrees)


@given(st.lists(st.integers(0, 20)), st.lists(st.integers(0, 20)))
def test_addition_is_multiset_union(a, b):
    assert InDegreePolynomial.from_degrees(a) + InDegreePolynomial.from_degrees(b) == InDegreePolynomial.from_degrees(a + b)
