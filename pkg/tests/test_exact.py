from fractions import Fraction

from hypothesis import given, settings
from hypothesis import strategies as st

from weitzenboeck import linalg
from weitzenboeck.exact import GaussianRational, GMatrix, commutator, linear_combinations

F = Fraction
fracs = st.fractions(min_value=-20, max_value=20, max_denominator=12)
gauss = st.builds(GaussianRational, fracs, fracs)


def mats(r, c):
    return st.lists(st.lists(gauss, min_size=c, max_size=c), min_size=r, max_size=r).map(GMatrix.from_rows)


@given(gauss)
def test_gaussian_string_round_trip(z):
    assert GaussianRational.parse(str(z)) == z


@given(gauss, gauss)
def test_gaussian_field_axioms(a, b):
    assert (a + b) - b == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    if b != 0:
        assert (a / b) * b == a
    assert (a * a.conjugate()).is_real()


def test_parse_forms():
    assert GaussianRational.parse("i") == GaussianRational(0, 1)
    assert GaussianRational.parse("-i") == GaussianRational(0, -1)
    assert GaussianRational.parse("1/2-3/4*i") == GaussianRational(F(1, 2), F(-3, 4))
    assert GaussianRational.parse("-5") == GaussianRational(-5, 0)


@settings(max_examples=40)
@given(mats(3, 3), mats(3, 3), mats(3, 3))
def test_matrix_ring(a, b, c):
    assert (a @ b) @ c == a @ (b @ c)
    assert a @ (b + c) == a @ b + a @ c
    assert (a @ b).H == b.H @ a.H
    assert commutator(a, b) == -commutator(b, a)


@given(mats(3, 3))
def test_inverse(a):
    if a.rank() == 3:
        assert a @ a.inverse() == GMatrix.identity(3)


@given(mats(2, 3))
def test_string_round_trip(a):
    assert GMatrix.from_strings(a.to_strings()) == a


def test_kron_trace_scalar():
    a = GMatrix.from_rows([[1, 2], [3, 4]])
    k = a.kron(GMatrix.identity(2))
    assert k.shape == (4, 4) and k.trace() == 10
    assert GMatrix.identity(3).scale(F(2, 3)).scalar_value() == F(2, 3)
    assert a.scalar_value() is None


@given(st.lists(mats(2, 2), min_size=1, max_size=3), st.data())
def test_linear_combinations(ms, data):
    coeffs = data.draw(st.lists(st.lists(fracs, min_size=len(ms), max_size=len(ms)), min_size=1, max_size=3))
    got = linear_combinations(ms, coeffs)
    for row, g in zip(coeffs, got):
        acc = GMatrix.zeros(2)
        for c, m in zip(row, ms):
            acc = acc + m.scale(c)
        assert g == acc


def test_column_basis():
    a = GMatrix.from_rows([[1, 2, 3], [2, 4, 6], [0, 0, 1]])
    assert a.rank() == 2
    assert len(a.column_basis()) == 2


@given(st.lists(st.lists(fracs, min_size=4, max_size=4), min_size=1, max_size=4))
def test_rref_rank_and_span(rows):
    r = linalg.rank(rows)
    assert r <= min(len(rows), 4)
    combo = [sum(x[k] * (i + 1) for i, x in enumerate(rows)) for k in range(4)]
    assert linalg.in_span(rows, combo)
    assert linalg.rank(rows + [combo]) == r
