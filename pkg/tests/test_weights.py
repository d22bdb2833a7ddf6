from fractions import Fraction
from math import comb

import pytest
from hypothesis import given
from strategies import dominant

from weitzenboeck.weights import (
    DominantWeight,
    MixedParity,
    NotDominant,
    RankMismatch,
    WeightContext,
    WeightError,
    delta,
    dim,
    dominant_weights,
    fundamental,
    inner,
    is_dominant,
    lex_compare,
    parse_weight,
    positive_roots,
    spinor_weight,
    validate_weight,
)

F = Fraction


def test_parse_pads_with_zeros():
    assert parse_weight("2", 7).entries == (2, 0, 0)
    assert parse_weight("0", 6).entries == (0, 0, 0)
    assert parse_weight("1/2,1/2,-1/2", 6).entries == (F(1, 2), F(1, 2), F(-1, 2))


@pytest.mark.parametrize(
    "text, n, exc",
    [
        ("1,0,0", 4, RankMismatch),
        ("1,1/2", 5, MixedParity),
        ("1/3", 5, MixedParity),
        ("1,2", 5, NotDominant),
        ("1,-1", 5, NotDominant),
        ("1/2", 5, MixedParity),
        ("a", 5, WeightError),
    ],
)
def test_parse_rejects(text, n, exc):
    with pytest.raises(exc):
        parse_weight(text, n)


def test_negative_last_entry_only_for_even_n():
    assert is_dominant([1, -1], 4)
    assert is_dominant([2, 1, -1], 6)
    assert not is_dominant([1, -2], 4)
    assert not is_dominant([1, -1], 5)


def test_context_and_floats():
    with pytest.raises(WeightError):
        WeightContext(2)
    with pytest.raises(TypeError):
        validate_weight([1.0], 3)
    assert WeightContext(8).m == 4 and WeightContext(7).parity == "odd"


def test_delta_and_roots():
    assert delta(5) == (F(3, 2), F(1, 2))
    assert delta(6) == (2, 1, 0)
    # |positive roots| = m(m-1) for even n and m^2 for odd n
    assert len(positive_roots(6)) == 6
    assert len(positive_roots(7)) == 9


@pytest.mark.parametrize(
    "n, entries, d",
    [
        (3, (F(5),), 11),
        (3, (F(1, 2),), 2),
        (5, (2, 0), 14),
        (5, (1, 1), 10),
        (5, (F(1, 2), F(1, 2)), 4),
        (8, (F(1, 2),) * 4, 8),
        (10, (2, 0, 0, 0, 0), 54),
    ],
)
def test_dimension_values(n, entries, d):
    assert dim(validate_weight(entries, n)) == d


def test_dimension_families():
    for n in range(3, 12):
        m = n // 2
        assert dim(fundamental(n, 1)) == n
        assert dim(spinor_weight(n)) == 2 ** (m if n % 2 else m - 1)
        for p in range(m if n % 2 == 0 else m + 1):
            if p <= m and not (n % 2 == 0 and p == m):
                assert dim(fundamental(n, p)) == comb(n, p)
    for a in range(5):
        for b in range(-a, a + 1):
            assert dim(validate_weight((a, b), 4)) == (a + b + 1) * (a - b + 1)


def test_enumeration_and_order():
    ws = list(dominant_weights(5, 1))
    assert [str(w) for w in ws] == ["(0,0)", "(1,0)", "(1,1)", "(1/2,1/2)"]
    assert [str(w) for w in sorted(ws, reverse=True)] == ["(1,1)", "(1,0)", "(1/2,1/2)", "(0,0)"]
    assert len(list(dominant_weights(4, 1))) == 6
    assert lex_compare(validate_weight((1, -1), 4), validate_weight((1, 1), 4)) < 0


@given(dominant())
def test_dimension_positive_and_conjugation(rho):
    assert dim(rho) >= 1
    if rho.n % 2 == 0:
        assert dim(rho.conjugate()) == dim(rho)


@given(dominant())
def test_inner_product_symmetric(rho):
    d = delta(rho.n)
    assert inner(rho, d) == inner(d, rho.entries)
    assert inner(rho, rho) >= 0


def test_direct_construction_validates():
    with pytest.raises(NotDominant):
        DominantWeight((F(0), F(1)), 5)
