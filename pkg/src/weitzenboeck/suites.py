"""Verification suites run by ``weitzenboeck verify``.

Work is split into cells (suite, n, item); every cell returns plain dicts so cells
can run in worker processes and the report can be assembled in a fixed order.
"""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from typing import Callable

from .bochner import RankDeficit, closure_report, fourdim_rows, fourdim_weight, independent_family
from .branching import closed_form_weight, decompose
from .casimir import casimir_q, conformal_weight, pfaffian_eigenvalue, verify_c_identity, verify_pf_relations
from .weights import DominantWeight, dim, dominant_weights, format_weight

SUITES = ("casimir", "enveloping", "clifford", "curvature", "fourdim")
DEFAULT_RANGES = {
    "casimir": range(3, 10),
    "enveloping": range(3, 6),
    "clifford": range(3, 6),
    "curvature": range(4, 7),
    "fourdim": range(4, 5),
}


def _check(name: str, ok: bool, detail: str = "") -> dict:
    return {"name": name, "passed": bool(ok), "detail": "" if ok else detail}


def _cell(suite: str, n: int, item: str, checks: list[dict], skipped: str | None = None) -> dict:
    return {"suite": suite, "n": n, "item": item, "checks": checks, "skipped": skipped}


# ---------------------------------------------------------------------------
# scalar grid


def casimir_cell(n: int, max_entry: int = 3, q_max: int = 4) -> dict:
    checks = []
    bad: dict[str, list[str]] = {k: [] for k in ("c_identity", "pf_relations", "dimension_sum", "weights", "rank")}
    count = 0
    for rho in dominant_weights(n, max_entry):
        count += 1
        label = format_weight(rho.entries)
        if not all(verify_c_identity(rho, q) for q in range(q_max + 1)):
            bad["c_identity"].append(label)
        if n % 2 == 0 and not verify_pf_relations(rho):
            bad["pf_relations"].append(label)
        dec = decompose(rho)
        if sum(s.dimension for s in dec.summands) != n * dim(rho):
            bad["dimension_sum"].append(label)
        if any(conformal_weight(rho, s.lam) != closed_form_weight(rho, s.shift) for s in dec.summands):
            bad["weights"].append(label)
        try:
            independent_family(rho)
            if not all(closure_report(rho).values()):
                bad["rank"].append(label + " (closure)")
        except RankDeficit as exc:
            bad["rank"].append(str(exc))
    for name, items in bad.items():
        if name == "pf_relations" and n % 2:
            continue
        checks.append(_check(name, not items, ", ".join(items[:5])))
    return _cell("casimir", n, f"{count} weights", checks)


# ---------------------------------------------------------------------------
# matrix oracle


def _suite_reps(n: int, budget: int, include_grid: bool):
    from .oracle.realization import BudgetExceeded
    from .oracle.reps import build_rep, rep_suite

    reps = list(rep_suite(n))
    skipped = []
    if include_grid:
        seen = {r.rho for r in reps}
        for rho in dominant_weights(n, 2):
            if rho in seen or n * dim(rho) > budget:
                continue
            try:
                reps.append(build_rep(rho, budget))
            except BudgetExceeded as exc:
                skipped.append(f"{rho}: {exc}")
    return reps, skipped


def oracle_cell(suite: str, n: int, q_max: int = 4, budget: int = 64) -> list[dict]:
    from .oracle.verify import verify_identities

    reps, skipped = _suite_reps(n, budget, suite == "clifford")
    out = []
    for rep in reps:
        report = verify_identities(rep, q_max, clifford=(suite == "clifford"))
        checks = [_check(c.name, c.passed, c.detail) for c in report.checks]
        out.append(_cell(suite, n, f"{rep.label} {rep.rho}", checks))
    for s in skipped:
        out.append(_cell(suite, n, s.split(":")[0], [], skipped=s))
    return out


# ---------------------------------------------------------------------------
# curvature


def curvature_cell(n: int, samples: int = 20, seed: int = 0, q_max: int = 3) -> dict:
    from .curvature import (
        curvature_action,
        curvature_endomorphism_hat_q,
        curvature_endomorphism_pf,
        curvature_endomorphism_q,
        decompose_curvature,
        einstein_perturbation,
        hat_from_plain,
        random_curvature,
        random_traceless_symmetric,
        sphere_curvature,
        split_action,
        weyl_pf,
    )
    from .oracle.reps import natural_rep, spinor_rep

    nat = natural_rep(n)
    spin = spinor_rep(n) if n % 2 else spinor_rep(n, 1)
    reps = [nat, spin]
    fails: dict[str, str] = {}

    def note(name, ok, detail):
        if not ok and name not in fails:
            fails[name] = detail

    for k in range(samples):
        s = seed + k
        R = random_curvature(n, s)
        dec = decompose_curvature(R)
        note("decomposition", dec.reassemble() == R and dec.weyl_traceless() and dec.einstein_traceless(), f"seed {s}")
        note("split_action", all(split_action(R, nat, i, j) == curvature_action(R, nat, i, j)
                                 for i in range(n) for j in range(n)), f"seed {s}")
        for rep in reps:
            for q in range(q_max + 1):
                note("self_adjoint_q", rep.is_self_adjoint(curvature_endomorphism_q(R, rep, q)),
                     f"seed {s}, {rep.rho}, q={q}")
            note("translation", hat_from_plain(R, rep, 2) == curvature_endomorphism_hat_q(R, rep, 2),
                 f"seed {s}, {rep.rho}")
        note("spinor_R1", curvature_endomorphism_q(R, spin, 1).scalar_value() == R.kappa() / 4, f"seed {s}")
        if n % 2 == 0:
            E = random_traceless_symmetric(n, 10_000 + s)
            R2 = einstein_perturbation(R, E)
            for rep in reps:
                a = curvature_endomorphism_pf(R, rep)
                note("self_adjoint_pf", rep.is_self_adjoint(a), f"seed {s}, {rep.rho}")
                note("einstein_independence", a == curvature_endomorphism_pf(R2, rep), f"seed {s}, {rep.rho}")
                shift = rep.identity().scale(pfaffian_eigenvalue(rep.rho) * R.kappa() / (n - 1))
                note("pf_weyl_form", a == weyl_pf(R, rep) + shift, f"seed {s}, {rep.rho}")
    for kappa in (Fraction(n * (n - 1)), Fraction(-3, 2)):
        S = sphere_curvature(n, kappa)
        for rep in reps:
            for q in range(q_max + 1):
                expect = casimir_q(rep.rho, q + 1) * kappa / (n * (n - 1))
                note("sphere", curvature_endomorphism_q(S, rep, q).scalar_value() == expect,
                     f"kappa={kappa}, {rep.rho}, q={q}")
    names = ["decomposition", "split_action", "self_adjoint_q", "translation", "spinor_R1", "sphere"]
    if n % 2 == 0:
        names += ["self_adjoint_pf", "einstein_independence", "pf_weyl_form"]
    checks = [_check(name, name not in fails, fails.get(name, "")) for name in names]
    return _cell("curvature", n, f"{samples} tensors from seed {seed}", checks)


def fourdim_cell(samples: int = 5, seed: int = 0, kl_max: int = 4, table_max: int = 6) -> dict:
    from .curvature import (
        FourDimSplit,
        assemble_four_dim,
        curvature_endomorphism_pf,
        curvature_endomorphism_q,
        four_dim_endomorphisms,
        four_dim_from_split,
        four_dim_split,
        random_curvature,
    )
    from .oracle.reps import build_rep

    fails: dict[str, str] = {}

    def note(name, ok, detail):
        if not ok and name not in fails:
            fails[name] = detail

    zero = tuple(tuple(Fraction(0) for _ in range(3)) for _ in range(3))
    tensors = [random_curvature(4, seed + k) for k in range(samples)]
    splits = [four_dim_split(R) for R in tensors]
    for R, sp in zip(tensors, splits):
        note("reassembly", assemble_four_dim(sp) == R, "split does not reassemble")
    for k in range(kl_max + 1):
        for l in range(kl_max + 1):
            rho = fourdim_weight(k, l)
            rep = build_rep(rho, 2000)
            for t, (R, sp) in enumerate(zip(tensors, splits)):
                rp, rm = four_dim_endomorphisms(R, rep)
                tag = f"(k,l)=({k},{l}), sample {t}"
                note("sum_rule", curvature_endomorphism_q(R, rep, 1) == rp + rm, tag)
                note("difference_rule", curvature_endomorphism_pf(R, rep) == rp - rm, tag)
                fp, fm = four_dim_from_split(sp, rep, k, l)
                note("split_formula", fp == rp and fm == rm, tag)
                if l == 0:
                    note("anti_self_dual_vanishing", rm.is_zero(), tag)
                if l == 1:
                    R0 = assemble_four_dim(FourDimSplit(sp.Wplus, zero, sp.K, sp.kappa))
                    note("w_minus_independence", four_dim_endomorphisms(R0, rep)[1] == rm, tag)
    for k in range(1, table_max + 1):
        for l in range(1, table_max + 1):
            lap, plus, minus = fourdim_rows(fourdim_weight(k, l))
            want = ([1, 1, 1, 1], [k, k, -(k + 2), -(k + 2)], [l, -(l + 2), l, -(l + 2)])
            got = [list(lap.coefficients), list(plus.coefficients), list(minus.coefficients)]
            note("coefficient_table", got == [list(map(Fraction, w)) for w in want], f"(k,l)=({k},{l})")
    names = ["reassembly", "sum_rule", "difference_rule", "split_formula", "anti_self_dual_vanishing",
             "w_minus_independence", "coefficient_table"]
    checks = [_check(name, name not in fails, fails.get(name, "")) for name in names]
    return _cell("fourdim", 4, f"{samples} tensors, (k,l) <= ({kl_max},{kl_max})", checks)


# ---------------------------------------------------------------------------
# driver


def _run_task(task: tuple) -> list[dict]:
    kind, args = task
    t0 = time.perf_counter()
    if kind == "casimir":
        out = [casimir_cell(*args)]
    elif kind in ("enveloping", "clifford"):
        out = oracle_cell(kind, *args)
    elif kind == "curvature":
        out = [curvature_cell(*args)]
    elif kind == "fourdim":
        out = [fourdim_cell(*args)]
    else:
        raise ValueError(kind)
    for cell in out:
        cell["seconds"] = round(time.perf_counter() - t0, 3)
    return out


def plan(suites, n_values=None, q_max: int = 4, budget: int = 64, seed: int = 0, samples: int = 20) -> list[tuple]:
    tasks = []
    for suite in suites:
        ns = list(n_values) if n_values is not None else list(DEFAULT_RANGES[suite])
        if suite == "casimir":
            tasks += [("casimir", (n, 3, q_max)) for n in ns]
        elif suite in ("enveloping", "clifford"):
            tasks += [(suite, (n, q_max, budget)) for n in ns if n <= 8]
        elif suite == "curvature":
            tasks += [("curvature", (n, samples, seed, min(q_max, 3))) for n in ns if n >= 3]
        elif suite == "fourdim":
            tasks.append(("fourdim", (max(1, samples // 4), seed)))
    return tasks


def run(tasks: list[tuple], jobs: int = 1, progress: Callable[[dict], None] | None = None) -> dict:
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_run_task, tasks))
    else:
        results = [_run_task(t) for t in tasks]
    cells = [c for group in results for c in group]
    if progress:
        for c in cells:
            progress(c)
    failed = [c for c in cells if any(not ch["passed"] for ch in c["checks"])]
    skipped = [c for c in cells if c["skipped"]]
    return {
        "passed": not failed,
        "cells": cells,
        "failures": len(failed),
        "skipped": len(skipped),
        "checks": sum(len(c["checks"]) for c in cells),
    }
