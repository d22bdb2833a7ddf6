from fractions import Fraction

import pytest
from hypothesis import given
from strategies import dominant

from weitzenboeck.branching import closed_form_weight, decompose, is_exceptional, summand_count
from weitzenboeck.casimir import NotASummand, casimir2, conformal_weight
from weitzenboeck.weights import dim, parse_weight, validate_weight

F = Fraction


def rows(n, text):
    dec = decompose(parse_weight(text, n))
    return [(str(s.lam), s.dimension, s.conformal_weight) for s in dec.summands]


def test_vector_rep_n5():
    assert rows(5, "1") == [("(2,0)", 14, 1), ("(1,1)", 10, -1), ("(0,0)", 1, -4)]


def test_spinor_has_two_summands():
    dec = decompose(parse_weight("1/2,1/2,1/2", 7))
    assert [str(s.lam) for s in dec.summands] == ["(3/2,1/2,1/2)", "(1/2,1/2,1/2)"]
    assert dec.conformal_weights() == [F(1, 2), -3]


def test_exceptional_pair_n4():
    dec = decompose(parse_weight("1", 4))
    assert dec.exceptional
    plus, minus = dec.exceptional_pair
    assert dec.summands[plus].lam.entries == (1, 1)
    assert dec.summands[minus].lam.entries == (1, -1)
    assert dec.summands[plus].conformal_weight == dec.summands[minus].conformal_weight == -1
    assert dec.summands[plus].pf_eigenvalue == -dec.summands[minus].pf_eigenvalue == 2


def test_trivial_rep():
    dec = decompose(parse_weight("0", 6))
    assert len(dec) == 1 and dec.summands[0].conformal_weight == 0
    assert not is_exceptional(parse_weight("0", 6))


def test_odd_n_keeps_rho():
    # rho itself occurs exactly when the last entry is positive
    assert summand_count(parse_weight("1,1", 5)) == 3
    assert "(1,1)" in [str(w) for w in decompose(parse_weight("1,1", 5)).weights()]
    assert "(1,0)" not in [str(w) for w in decompose(parse_weight("1", 5)).weights()]


def test_not_a_summand():
    with pytest.raises(NotASummand):
        conformal_weight(parse_weight("1", 5), parse_weight("1", 5))


@given(dominant())
def test_dimension_sum_rule(rho):
    assert sum(s.dimension for s in decompose(rho).summands) == rho.n * dim(rho)


@given(dominant())
def test_closed_form_matches_casimir_difference(rho):
    for s in decompose(rho).summands:
        assert closed_form_weight(rho, s.shift) == conformal_weight(rho, s.lam)
        # independent route through c_2
        assert 4 * s.conformal_weight == casimir2(s.lam) - casimir2(rho) - 2 * (rho.n - 1)


@given(dominant())
def test_summands_sorted_and_weights_distinct(rho):
    dec = decompose(rho)
    lams = dec.weights()
    assert lams == sorted(lams, reverse=True)
    distinct = len(set(dec.conformal_weights()))
    assert distinct == len(lams) - (1 if dec.exceptional else 0)
    assert dec.exceptional == (rho.n % 2 == 0 and rho[rho.m - 2] > 0 and rho[rho.m - 1] == 0)


@given(dominant())
def test_translated_weight(rho):
    for s in decompose(rho).summands:
        assert s.translated_weight == s.conformal_weight + F(rho.n - 1, 2)


@given(dominant(n_min=4, n_max=8))
def test_conjugation_symmetry(rho):
    if rho.n % 2:
        return
    a = decompose(rho)
    b = decompose(rho.conjugate())
    assert sorted(a.conformal_weights()) == sorted(b.conformal_weights())
    assert sorted(s.lam.conjugate() for s in a.summands) == sorted(b.weights())


def test_summand_count_extremes():
    for n in range(3, 10):
        m = n // 2
        # all entries equal: only rho + mu_1, rho - mu_m and (odd n) rho itself
        assert summand_count(validate_weight([3] * m, n)) == 2 + n % 2
        # strictly decreasing entries: every shift is dominant
        generic = validate_weight([3 * (m - i) for i in range(m)], n)
        assert summand_count(generic) == 2 * m + n % 2
