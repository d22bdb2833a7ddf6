"""Exact matrix checks of the enveloping-algebra and Clifford identities on a
concrete module.  Failures are reported, never raised."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from ..casimir import casimir_hat_q, casimir_q, pfaffian_eigenvalue
from ..exact import GMatrix, commutator
from ..weights import dim
from .clifford import clifford_blocks
from .enveloping import PF_MAX_N, casimir_trace, e_hat_power, e_power, pf_elements
from .realization import RepRealization


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class VerificationReport:
    rep: str
    n: int
    q_max: int
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def get(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "rep": self.rep,
            "n": self.n,
            "q_max": self.q_max,
            "passed": self.passed,
            "checks": [{"name": c.name, "passed": c.passed, "detail": c.detail} for c in self.checks],
        }


def _run(report: VerificationReport, name: str, fn: Callable[[], str | None]) -> None:
    try:
        problem = fn()
    except Exception as exc:  # a crash inside a check is a finding
        problem = f"{type(exc).__name__}: {exc}"
    report.checks.append(Check(name, problem is None, problem or ""))


def _sign(q: int) -> int:
    return -1 if q % 2 else 1


# ---------------------------------------------------------------------------
# enveloping algebra


def _enveloping_checks(rep: RepRealization, q_max: int, report: VerificationReport) -> None:
    n, rho = rep.n, rep.rho
    eye = rep.identity()
    c_hat = [casimir_hat_q(rho, q) for q in range(q_max + 2)]
    idx = [(i, j) for i in range(n) for j in range(n)]
    eh = lambda i, j, q: e_hat_power(rep, i, j, q)  # noqa: E731

    def recursion(parity=None):
        for q in range(1, q_max + 1):
            if parity is not None and q % 2 != parity:
                continue
            for i, j in idx:
                rhs = eh(j, i, q).scale(_sign(q))
                if q % 2:
                    rhs = rhs - eh(j, i, q - 1)
                for p in range(q):
                    rhs = rhs + eh(j, i, p).scale(_sign(p) * c_hat[q - 1 - p])
                if eh(i, j, q) != rhs:
                    return f"fails at q={q}, (i,j)=({i + 1},{j + 1})"
        return None

    def big_e(i, j, q):
        out = eh(i, j, q).scale(-Fraction(1 + _sign(q), 2))
        for p in range(q + 1):
            out = out + eh(i, j, p).scale(_sign(p) * c_hat[q - p])
        return out

    def symmetry():
        for q in range(q_max + 1):
            for i, j in idx:
                if big_e(i, j, q) != big_e(j, i, q).scale(_sign(q)):
                    return f"fails at q={q}, (i,j)=({i + 1},{j + 1})"
        return None

    def covariance():
        for q in range(q_max + 1):
            for k in range(n):
                for l in range(k + 1, n):
                    for i, j in idx:
                        lhs = commutator(rep.e(k, l), e_power(rep, i, j, q))
                        rhs = GMatrix.zeros(rep.dim)
                        if k == i:
                            rhs = rhs + e_power(rep, l, j, q)
                        if k == j:
                            rhs = rhs + e_power(rep, i, l, q)
                        if i == l:
                            rhs = rhs - e_power(rep, k, j, q)
                        if l == j:
                            rhs = rhs - e_power(rep, i, k, q)
                        if lhs != rhs:
                            return f"fails at q={q}"
        return None

    def product_law():
        for total in range(q_max + 1):
            for p in range(total + 1):
                for i, j in idx:
                    acc = GMatrix.zeros(rep.dim)
                    for k in range(n):
                        acc = acc + e_power(rep, i, k, p) @ e_power(rep, k, j, total - p)
                    if acc != e_power(rep, i, j, total):
                        return f"fails at p={p}, q={total - p}"
        return None

    def hat_antisymmetry():
        for i, j in idx:
            rhs = -eh(j, i, 1) + (eye.scale(n - 1) if i == j else GMatrix.zeros(rep.dim))
            if eh(i, j, 1) != rhs:
                return f"fails at ({i + 1},{j + 1})"
        return None

    def hat_step():
        for q in range(q_max):
            for i, j in idx:
                rhs = -eh(j, i, q)
                if i == j:
                    rhs = rhs + eye.scale(c_hat[q])
                for k in range(n):
                    rhs = rhs - eh(k, j, q) @ eh(k, i, 1)
                if eh(i, j, q + 1) != rhs:
                    return f"fails at q={q}, (i,j)=({i + 1},{j + 1})"
        return None

    def trace_route():
        for q in range(q_max + 1):
            if casimir_trace(rep, q) != casimir_q(rho, q):
                return f"q={q}: trace {casimir_trace(rep, q)} vs {casimir_q(rho, q)}"
        return None

    _run(report, "universal_recursion", recursion)
    _run(report, "even_recursion", lambda: recursion(0))
    _run(report, "odd_recursion", lambda: recursion(1))
    _run(report, "hat_symmetry", symmetry)
    _run(report, "adjoint_covariance", covariance)
    _run(report, "product_law", product_law)
    _run(report, "hat_antisymmetry", hat_antisymmetry)
    _run(report, "hat_step", hat_step)
    _run(report, "trace_casimir", trace_route)


def _pf_checks(rep: RepRealization, report: VerificationReport) -> None:
    n, m = rep.n, rep.n // 2
    eye = rep.identity()

    def scalar():
        pf, _ = pf_elements(rep)
        val = pf.scalar_value()
        if val != pfaffian_eigenvalue(rep.rho):
            return f"pf acts by {val}, expected {pfaffian_eigenvalue(rep.rho)}"
        return None

    def antisymmetry():
        pf, tab = pf_elements(rep)
        for i in range(n):
            for j in range(n):
                rhs = pf.scale(2) if i == j else GMatrix.zeros(rep.dim)
                if tab[(i, j)] + tab[(j, i)] != rhs:
                    return f"fails at ({i + 1},{j + 1})"
        return None

    def trace():
        pf, tab = pf_elements(rep)
        acc = GMatrix.zeros(rep.dim)
        for i in range(n):
            acc = acc + tab[(i, i)]
        return None if acc == pf.scale(2 * m) else "sum of diagonal pf_ii differs from 2m pf"

    _run(report, "pf_scalar", scalar)
    _run(report, "pf_antisymmetry", antisymmetry)
    _run(report, "pf_trace", trace)
    del eye


# ---------------------------------------------------------------------------
# Clifford homomorphisms


def _clifford_checks(rep: RepRealization, q_max: int, report: VerificationReport) -> None:
    n, rho = rep.n, rep.rho
    data = clifford_blocks(rep)
    blocks = list(data)
    eye = rep.identity()
    zero = GMatrix.zeros(rep.dim)
    idx = [(i, j) for i in range(n) for j in range(n)]
    half = Fraction(n - 1, 2)

    def weighted(i, j, weight):
        acc = zero
        for b in blocks:
            c = weight(b)
            if c:
                acc = acc + b.pair(i, j).scale(c)
        return acc

    def power_sum():
        for q in range(q_max + 1):
            for i, j in idx:
                if weighted(i, j, lambda b: b.conformal_weight ** q) != e_power(rep, i, j, q):
                    return f"fails at q={q}, (i,j)=({i + 1},{j + 1})"
        return None

    def hat_power_sum():
        for q in range(q_max + 1):
            for i, j in idx:
                if weighted(i, j, lambda b: (b.conformal_weight + half) ** q) != e_hat_power(rep, i, j, q):
                    return f"fails at q={q}"
        return None

    def completeness():
        for i, j in idx:
            if weighted(j, i, lambda b: 1) != (eye if i == j else zero):
                return f"fails at ({i + 1},{j + 1})"
        return None

    def weight_action():
        for b in blocks:
            for j in range(n):
                acc = GMatrix.zeros(*b.maps[0].shape)
                for i in range(n):
                    acc = acc + b.maps[i] @ rep.e(i, j)
                if acc != b.maps[j].scale(b.conformal_weight):
                    return f"fails for {b.lam}, j={j + 1}"
        return None

    def dimension_ratio():
        for b in blocks:
            acc = zero
            for i in range(n):
                acc = acc + b.pair(i, i)
            if acc != eye.scale(Fraction(dim(b.lam), dim(rho))):
                return f"fails for {b.lam}"
        return None

    def sym_pair(i, j, weight):
        return weighted(i, j, weight) + weighted(j, i, weight)

    def clifford_relation():
        for i, j in idx:
            if sym_pair(i, j, lambda b: 1) != (eye.scale(2) if i == j else zero):
                return f"fails at ({i + 1},{j + 1})"
        return None

    def casimir_relations():
        for q in range(1, max(1, q_max // 2) + 1):
            c_hat = [casimir_hat_q(rho, k) for k in range(2 * q)]

            def coeff(b, q=q, c_hat=c_hat):
                w_hat = b.conformal_weight + half
                return sum((c_hat[2 * q - 1 - p] * (-w_hat) ** p for p in range(2 * q)), Fraction(0))

            for i, j in idx:
                if not sym_pair(i, j, coeff).is_zero():
                    return f"fails at q={q}, (i,j)=({i + 1},{j + 1})"
        return None

    def conformal_equivariance():
        for b in blocks:
            tgt = b.target
            for k, l in ((k, l) for k in range(n) for l in range(k + 1, n)):
                for r in range(n):
                    xi = [0] * n
                    if r == k:
                        xi[l] += 1
                    if r == l:
                        xi[k] -= 1
                    lhs = b.p(xi)
                    rhs = tgt.e(k, l) @ b.maps[r] - b.maps[r] @ rep.e(k, l)
                    if lhs != rhs:
                        return f"fails for {b.lam} at e_{k + 1}{l + 1}, e_{r + 1}"
        return None

    def projection_formula():
        d = rep.dim
        for b in blocks:
            for j in range(n):
                col = GMatrix.zeros(d * n, d)
                for i in range(n):
                    col = col + _inject(d, n, i) @ b.pair(i, j)
                if b.projector @ _inject(d, n, j) != col:
                    return f"fails for {b.lam}, j={j + 1}"
        return None

    _run(report, "power_sum", power_sum)
    _run(report, "hat_power_sum", hat_power_sum)
    _run(report, "completeness", completeness)
    _run(report, "conformal_weight_action", weight_action)
    _run(report, "dimension_ratio", dimension_ratio)
    _run(report, "clifford_relation", clifford_relation)
    _run(report, "casimir_relations", casimir_relations)
    _run(report, "equivariance", conformal_equivariance)
    _run(report, "projection_formula", projection_formula)

    if n % 2 == 0 and n <= PF_MAX_N:
        pf_val = {b.lam: pfaffian_eigenvalue(b.lam) for b in blocks}
        pf_rho = pfaffian_eigenvalue(rho)

        def pf_power_sum():
            _, tab = pf_elements(rep)
            for i, j in idx:
                if weighted(i, j, lambda b: pf_val[b.lam]) != tab[(i, j)]:
                    return f"fails at ({i + 1},{j + 1})"
            return None

        def pf_trace_sum():
            acc = zero
            for i in range(n):
                acc = acc + weighted(i, i, lambda b: pf_val[b.lam])
            return None if acc == eye.scale(n * pf_rho) else "weighted trace differs from 2m pf"

        def pf_relation():
            for i, j in idx:
                rhs = eye.scale(2 * pf_rho) if i == j else zero
                if sym_pair(i, j, lambda b: pf_val[b.lam]) != rhs:
                    return f"fails at ({i + 1},{j + 1})"
            return None

        def pf_weight_relation():
            for i, j in idx:
                if not sym_pair(i, j, lambda b: pf_val[b.lam] * (b.conformal_weight - 1)).is_zero():
                    return f"fails at ({i + 1},{j + 1})"
            return None

        def targets_pf():
            for b in blocks:
                got = pf_elements(b.target)[0].scalar_value()
                if got != pf_val[b.lam]:
                    return f"pf on {b.lam} acts by {got}, expected {pf_val[b.lam]}"
            return None

        _run(report, "pf_power_sum", pf_power_sum)
        _run(report, "pf_trace_sum", pf_trace_sum)
        _run(report, "pf_relation", pf_relation)
        _run(report, "pf_weight_relation", pf_weight_relation)
        _run(report, "summand_pf", targets_pf)


def _inject(d: int, n: int, j: int) -> GMatrix:
    return GMatrix.from_entries(d * n, d, {(a * n + j, a): 1 for a in range(d)})


def verify_identities(rep: RepRealization, q_max: int = 4, clifford: bool = True) -> VerificationReport:
    report = VerificationReport(rep.label or str(rep.rho), rep.n, q_max)
    _enveloping_checks(rep, q_max, report)
    if rep.n % 2 == 0 and rep.n <= PF_MAX_N:
        _pf_checks(rep, report)
    if clifford:
        _clifford_checks(rep, q_max, report)
    return report
