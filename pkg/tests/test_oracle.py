import json
from fractions import Fraction

import pytest

from weitzenboeck.casimir import casimir2, casimir_q, pfaffian_eigenvalue
from weitzenboeck.exact import GMatrix
from weitzenboeck.oracle import (
    BudgetExceeded,
    ReducibleRequest,
    RepInvariantError,
    build_rep,
    dirac_rep,
    exterior_rep,
    gamma_matrices,
    middle_forms,
    natural_rep,
    pf_elements,
    spinor_rep,
    trivial_rep,
)
from weitzenboeck.oracle.clifford import clifford_blocks
from weitzenboeck.oracle.enveloping import casimir_trace, e_power
from weitzenboeck.oracle.reps import rep_suite
from weitzenboeck.oracle.serialize import rep_from_json, rep_to_json
from weitzenboeck.oracle.verify import verify_identities
from weitzenboeck.weights import dim, parse_weight

F = Fraction


@pytest.mark.parametrize("n", [3, 4, 5, 6, 7])
def test_gamma_matrices_satisfy_clifford_relations(n):
    # gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij
    gam = gamma_matrices(n)
    eye = GMatrix.identity(gam[0].nrows)
    for i in range(n):
        for j in range(n):
            anti = gam[i] @ gam[j] + gam[j] @ gam[i]
            assert anti == (eye.scale(-2) if i == j else GMatrix.zeros(eye.nrows))


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_basic_reps_validate(n):
    for rep in (trivial_rep(n), natural_rep(n), spinor_rep(n)):
        rep.validate()
        assert rep.dim == dim(rep.rho)
        assert rep.casimir2_matrix().scalar_value() == casimir2(rep.rho)


def test_dirac_module_splits_by_pf():
    mod, proj = dirac_rep(4)
    assert mod.dim == 4
    plus, minus = spinor_rep(4, 1), spinor_rep(4, -1)
    assert pf_elements(plus)[0].scalar_value() == F(3, 4)
    assert pf_elements(minus)[0].scalar_value() == -F(3, 4)


def test_exterior_and_middle_forms():
    assert exterior_rep(6, 2).dim == 15
    with pytest.raises(ReducibleRequest):
        exterior_rep(6, 3)
    halves = middle_forms(6)
    assert {s: r.dim for s, r in halves.items()} == {1: 10, -1: 10}
    for s, r in halves.items():
        assert pf_elements(r)[0].scalar_value() == pfaffian_eigenvalue(r.rho)
        assert r.rho.entries[-1] * s > 0


@pytest.mark.parametrize(
    "n, text, d",
    [(3, "2", 5), (4, "2", 9), (4, "3/2,1/2", 6), (5, "2", 14), (6, "1,1", 15), (6, "1,1,-1", 10), (4, "2,-1", 8)],
)
def test_build_rep_matches_weyl_dimension(n, text, d):
    rho = parse_weight(text, n)
    rep = build_rep(rho)
    assert rep.dim == d == dim(rho)
    assert rep.rho == rho


def test_budget():
    with pytest.raises(BudgetExceeded):
        build_rep(parse_weight("3,1", 6), budget=20)


def test_cache_round_trip(tmp_path, monkeypatch):
    monkeypatch.setenv("WEITZ_CACHE_DIR", str(tmp_path))
    rho = parse_weight("2,1", 4)
    first = build_rep(rho)
    files = list(tmp_path.iterdir())
    assert len(files) == 1
    second = build_rep(rho)
    assert second is not first
    assert all(second.e(i, j) == first.e(i, j) for i in range(4) for j in range(4))


def test_serialization_round_trip():
    rep = build_rep(parse_weight("1,1", 4))
    doc = json.loads(json.dumps(rep_to_json(rep)))
    back = rep_from_json(doc)
    assert back.rho == rep.rho and back.gram == rep.gram
    doc["generators"][0]["matrix"][0][0] = "5"
    with pytest.raises(RepInvariantError):
        rep_from_json(doc)
    with pytest.raises(RepInvariantError):
        rep_from_json({"schema": "other"})


@pytest.mark.parametrize("n", [3, 4, 5])
def test_trace_route_for_casimirs(n):
    for rep in rep_suite(n):
        for q in range(5):
            assert casimir_trace(rep, q) == casimir_q(rep.rho, q)


def test_pf_hodge_table_natural():
    rep = natural_rep(4)
    pf, tab = pf_elements(rep)
    assert pf.is_zero()
    assert tab[(0, 1)] == rep.e(2, 3)
    assert tab[(0, 2)] == -rep.e(1, 3)


def test_clifford_blocks_dimensions():
    rep = spinor_rep(5)
    data = clifford_blocks(rep)
    assert [b.target.dim for b in data] == [16, 4]
    assert [b.conformal_weight for b in data] == [F(1, 2), -2]


@pytest.mark.parametrize("n, text", [(6, "1,1"), (4, "1"), (3, "0"), (6, "1/2,1/2,1/2")])
def test_identities_on_extra_reps(n, text):
    report = verify_identities(build_rep(parse_weight(text, n)), q_max=4)
    assert report.passed, report.failures()


def test_corrupted_map_is_detected():
    rep = natural_rep(4)
    data = clifford_blocks(rep)
    block = next(iter(data))
    block.maps[0] = block.maps[0].scale(2)
    try:
        report = verify_identities(rep, q_max=2)
        assert not report.passed
        assert "completeness" in [c.name for c in report.failures()]
    finally:
        rep.cache.pop("clifford", None)


def test_e_power_zero_and_one():
    rep = natural_rep(3)
    assert e_power(rep, 0, 0, 0) == rep.identity()
    assert e_power(rep, 0, 1, 0).is_zero()
    assert e_power(rep, 0, 1, 1) == rep.e(0, 1)
