"""Acceptance criteria 1-10, one test per criterion, each timed against its budget."""
import contextlib
import io
import json
import time
from fractions import Fraction

from conftest import ACCEPTANCE_LINES

from weitzenboeck import cli, suites
from weitzenboeck.bochner import (
    fourdim_rows,
    fourdim_weight,
    independent_family,
    normalize_against,
    odd_family,
    pf_formula,
    pf_family_reduction,
)
from weitzenboeck.branching import decompose
from weitzenboeck.casimir import pfaffian_eigenvalue, verify_c_identity, verify_pf_relations
from weitzenboeck.oracle.enveloping import pf_elements
from weitzenboeck.oracle.reps import rep_suite
from weitzenboeck.oracle.verify import verify_identities
from weitzenboeck.weights import dim, dominant_weights, fundamental, validate_weight

F = Fraction
GRID = [(n, rho) for n in range(3, 10) for rho in dominant_weights(n, 3)]


@contextlib.contextmanager
def criterion(number: int, title: str, budget: float):
    t0 = time.perf_counter()
    status = "FAIL"
    try:
        yield
        elapsed = time.perf_counter() - t0
        assert elapsed < budget, f"took {elapsed:.2f} s, budget {budget} s"
        status = "PASS"
    finally:
        elapsed = time.perf_counter() - t0
        line = f"criterion {number}: {status} {title} ({elapsed:.2f} s, budget {budget:g} s)"
        ACCEPTANCE_LINES.append(line)
        print(line)


def run_cli(*argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = cli.main(list(argv))
    assert code == 0
    return json.loads(buf.getvalue())


def table_of(doc, title):
    for t in doc["tables"]:
        if t["title"] == title:
            return [dict(zip(t["columns"], row)) for row in t["rows"]]
    raise KeyError(title)


def test_criterion_01_spinor_table():
    with criterion(1, "spinor table: D^2 = nabla*nabla + kappa/4, Friedrich n/(4(n-1))", 1.0):
        for n in range(3, 12, 2):
            doc = run_cli("classical", "spinor", "--n", str(n))
            idents = {r["label"]: r for r in table_of(doc, "identities")}
            assert idents["dirac"]["lhs"] == "1 D*D"
            assert idents["dirac"]["rhs"] == "nabla*nabla + 1/4 kappa"
            consts = {r["name"]: r["value"] for r in table_of(doc, "constants")}
            assert F(consts["friedrich"]) == F(n, 4 * (n - 1))
            assert idents["friedrich"]["rhs"] == f"{F(n, 4 * (n - 1))} kappa"


def test_criterion_02_forms_table():
    with criterion(2, "forms table: 1/(p+1), 1/(n-p+1), p/(p+1), (n-p)/(n-p+1), p(n-p+1)", 1.0):
        checked = 0
        for n in range(3, 11):
            for p in range(1, n // 2):
                tab = normalize_against(fundamental(n, p), "forms")
                lap = tab.identity("laplacian").lhs_dict()
                gau = tab.identity("gauduchon").lhs_dict()
                assert lap == {"C": 1, "d": F(1, p + 1), "d*": F(1, n - p + 1)}
                assert gau == {"C": 1, "d": -F(p, p + 1), "d*": -F(n - p, n - p + 1)}
                assert tab.constant("gallot_meyer") == p * (n - p + 1)
                checked += 1
        assert checked == 16


def test_criterion_03_fourdim_table():
    with criterion(3, "four-dimensional rows for 1 <= k,l <= 6", 1.0):
        for k in range(1, 7):
            for l in range(1, 7):
                lap, plus, minus = fourdim_rows(fourdim_weight(k, l))
                assert list(lap.coefficients) == [1, 1, 1, 1]
                assert list(plus.coefficients) == [k, k, -(k + 2), -(k + 2)]
                assert list(minus.coefficients) == [l, -(l + 2), l, -(l + 2)]
                assert [(t.kind, t.scale) for t in plus.rhs] == [("R_plus", -1)]
                assert [(t.kind, t.scale) for t in minus.rhs] == [("R_minus", -1)]


def test_criterion_04_rank_law():
    with criterion(4, f"rank law on {len(GRID)} weights, n = 3..9, entries <= 3", 30.0):
        exceptional = 0
        for n, rho in GRID:
            cert = independent_family(rho)
            N = len(decompose(rho).summands)
            assert cert.rank == cert.expected == N // 2, rho
            if decompose(rho).exceptional:
                exceptional += 1
                assert cert.rank_without_exceptional == cert.rank - 1, rho
                assert cert.formulas[-1].label == "exceptional"
            else:
                assert cert.rank_without_exceptional == cert.rank
        assert exceptional > 0


def test_criterion_05_casimir_identities():
    with criterion(5, "odd translated Casimir identity (q <= 4) and pf relations on the grid", 30.0):
        for n, rho in GRID:
            assert all(verify_c_identity(rho, q) for q in range(5)), rho
            if n % 2 == 0:
                assert verify_pf_relations(rho), rho


def test_criterion_06_enveloping_oracle():
    with criterion(6, "recursion and symmetry as matrix identities, n = 3,4,5", 300.0):
        for n in (3, 4, 5):
            reps = rep_suite(n)
            assert len(reps) == (4 if n % 2 else 6)
            for rep in reps:
                report = verify_identities(rep, q_max=4, clifford=False)
                assert report.get("universal_recursion").passed, (rep.label, report.failures())
                assert report.get("hat_symmetry").passed, (rep.label, report.failures())
                assert report.passed, (rep.label, report.failures())


CLIFFORD_CHECKS = (
    "power_sum",
    "completeness",
    "conformal_weight_action",
    "dimension_ratio",
    "clifford_relation",
    "casimir_relations",
)


def test_criterion_07_clifford_oracle():
    with criterion(7, "Clifford homomorphism identities on the rep suite, pf table for n = 4", 300.0):
        for n in (3, 4, 5):
            for rep in rep_suite(n):
                report = verify_identities(rep, q_max=4, clifford=True)
                names = CLIFFORD_CHECKS + (("pf_relation", "pf_weight_relation", "pf_power_sum") if n == 4 else ())
                for name in names:
                    assert report.get(name).passed, (rep.label, name, report.get(name).detail)
                assert report.passed, (rep.label, report.failures())
        # Hodge-star table: pf_ij = sign * e_kl with (i,j,k,l) a permutation of (1,2,3,4)
        table = {(0, 1): (1, (2, 3)), (0, 2): (-1, (1, 3)), (0, 3): (1, (1, 2)),
                 (1, 2): (1, (0, 3)), (1, 3): (-1, (0, 2)), (2, 3): (1, (0, 1))}
        for rep in rep_suite(4):
            _, pf = pf_elements(rep)
            for (i, j), (sign, (k, l)) in table.items():
                assert pf[(i, j)] == rep.e(k, l).scale(sign), (rep.label, i, j)
                assert pf[(j, i)] == rep.e(k, l).scale(-sign)


def test_criterion_08_curvature():
    with criterion(8, "curvature endomorphisms on 100 random tensors per n = 4,5,6", 300.0):
        for n in (4, 5, 6):
            cell = suites.curvature_cell(n, samples=100, seed=0)
            bad = [c for c in cell["checks"] if not c["passed"]]
            assert not bad, (n, bad)
            expected = {"self_adjoint_q", "sphere", "spinor_R1"}
            if n % 2 == 0:
                expected |= {"self_adjoint_pf", "einstein_independence"}
            assert expected <= {c["name"] for c in cell["checks"]}
        cell = suites.fourdim_cell(samples=100, seed=0, kl_max=3)
        bad = [c for c in cell["checks"] if not c["passed"]]
        assert not bad, bad
        assert {"sum_rule", "difference_rule", "anti_self_dual_vanishing"} <= {c["name"] for c in cell["checks"]}


def test_criterion_09_dimension_sum():
    with criterion(9, "sum of summand dimensions equals n d(rho) on the grid", 5.0):
        for n, rho in GRID:
            assert sum(s.dimension for s in decompose(rho).summands) == n * dim(rho), rho


def test_criterion_10_pf_family():
    with criterion(10, "pf-family reduction for m = 2,3 and p = 1, 3/2, 2", 1.0):
        for m in (2, 3):
            for p in (F(1), F(3, 2), F(2)):
                red = pf_family_reduction(validate_weight([p] * m, 2 * m))
                assert red.operator_coefficient == (2 * p + m - 1) / p
                assert red.kappa_coefficient == (p + m - 1) / F(4 * m - 2)
                assert red.weyl_coefficient == 1 / (4 * p)
                assert red.proportional
                for sign in (1, -1):
                    rho = validate_weight([p] * (m - 1) + [sign * p], 2 * m)
                    r1_row = [-2 * b for b in odd_family(rho, 0).coefficients]
                    pf_row = pf_formula(rho).coefficients
                    assert [pfaffian_eigenvalue(rho) * b for b in r1_row] == [p * (p + m - 1) * b for b in pf_row]
