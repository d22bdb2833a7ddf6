from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import dominant, even_dominant

from weitzenboeck.casimir import (
    OddDimension,
    casimir2,
    casimir_hat_q,
    casimir_q,
    casimir_table,
    pfaffian_eigenvalue,
    recursion_coefficients,
    translate,
    verify_c_identity,
    verify_pf_relations,
)
from weitzenboeck.weights import fundamental, parse_weight, spinor_weight

F = Fraction


def test_quadratic_casimir_values():
    for n in range(3, 10):
        assert casimir2(fundamental(n, 1)) == 2 * (n - 1)
        assert casimir2(spinor_weight(n)) == F(n * (n - 1), 4)
    assert casimir2(parse_weight("1", 3)) == 4


def test_table_n4_adjoint_half():
    t = casimir_table(parse_weight("1,1", 4), 4)
    assert [t.c[q] for q in range(5)] == [4, 0, 8, -8, 24]
    assert [t.c_hat[q] for q in range(5)] == [4, 6, 17, F(83, 2), F(417, 4)]
    assert t.pf == 2


def test_pfaffian_eigenvalues():
    assert pfaffian_eigenvalue(spinor_weight(4, 1)) == F(3, 4)
    assert pfaffian_eigenvalue(spinor_weight(4, -1)) == -F(3, 4)
    assert pfaffian_eigenvalue(fundamental(6, 1)) == 0
    with pytest.raises(OddDimension):
        pfaffian_eigenvalue(fundamental(5, 1))
    with pytest.raises(ValueError):
        casimir_q(fundamental(5, 1), -1)


@given(dominant())
def test_low_casimirs(rho):
    assert casimir_q(rho, 0) == rho.n
    assert casimir_q(rho, 1) == 0
    assert casimir_q(rho, 2) == casimir2(rho)


@given(dominant(), st.integers(0, 6))
def test_translation_is_binomial(rho, q):
    c = {p: casimir_q(rho, p) for p in range(q + 1)}
    assert translate(c, rho.n, q) == casimir_hat_q(rho, q)


@given(dominant(), st.integers(0, 4))
def test_odd_translated_identity(rho, q):
    assert verify_c_identity(rho, q)


@given(even_dominant())
def test_pf_relations(rho):
    assert verify_pf_relations(rho)


@given(even_dominant())
def test_pf_conjugation(rho):
    assert pfaffian_eigenvalue(rho.conjugate()) == -pfaffian_eigenvalue(rho)


@given(dominant(n_max=7, max_entry=3))
def test_recursion_closed_form(rho):
    a = recursion_coefficients(rho, 6)
    assert a[(1, 0)] == rho.n - 1
    assert a[(3, 3)] == -1


def test_odd_dimension_relations():
    with pytest.raises(OddDimension):
        verify_pf_relations(fundamental(7, 2))
