"""Command-line interface: decompose | casimir | bw | classical | verify | export-rep."""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Any

from . import bochner, suites
from .branching import decompose
from .casimir import casimir2, casimir_q, casimir_hat_q, pfaffian_eigenvalue, verify_c_identity
from .weights import DominantWeight, WeightError, dim, fundamental, parse_weight, spinor_weight, validate_weight

SCHEMA = "weitzenboeck/1"

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# rendering


def render_value(x: Any, approx: bool = False) -> Any:
    if isinstance(x, bool) or x is None:
        return x
    if isinstance(x, Fraction):
        if approx and x.denominator != 1:
            with localcontext() as ctx:
                ctx.prec = 12
                return str(Decimal(x.numerator) / Decimal(x.denominator))
        return str(x)
    if isinstance(x, DominantWeight):
        return str(x)
    if isinstance(x, dict):
        return {k: render_value(v, approx) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [render_value(v, approx) for v in x]
    return x


def table(title: str, columns: list[str], rows: list[list[Any]]) -> dict:
    return {"title": title, "columns": columns, "rows": rows}


def document(command: str, meta: dict, tables: list[dict], extra: dict | None = None) -> dict:
    doc = {"schema": SCHEMA, "command": command}
    doc.update(meta)
    doc["tables"] = tables
    if extra:
        doc.update(extra)
    return doc


def emit(doc: dict, fmt: str, approx: bool, out=None) -> None:
    out = out or sys.stdout
    doc = render_value(doc, approx)
    if fmt == "json":
        out.write(json.dumps(doc, indent=2) + "\n")
        return
    meta = {k: v for k, v in doc.items() if k not in ("tables", "schema", "command") and not isinstance(v, (list, dict))}
    if fmt == "markdown":
        lines = [f"## {doc['command']}"]
        for k, v in meta.items():
            lines.append(f"- {k}: {_cell_text(v)}")
        for t in doc["tables"]:
            lines += ["", f"### {t['title']}", "", "| " + " | ".join(t["columns"]) + " |",
                      "|" + "|".join("---" for _ in t["columns"]) + "|"]
            for row in t["rows"]:
                lines.append("| " + " | ".join(_cell_text(c) for c in row) + " |")
        out.write("\n".join(lines) + "\n")
        return
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for t in doc["tables"]:
        writer.writerow([f"# {t['title']}"])
        writer.writerow(t["columns"])
        for row in t["rows"]:
            writer.writerow([_cell_text(c) for c in row])
    out.write(buf.getvalue())


def _cell_text(c: Any) -> str:
    if c is None:
        return ""
    if isinstance(c, bool):
        return "true" if c else "false"
    if isinstance(c, list):
        return "(" + ", ".join(_cell_text(x) for x in c) + ")"
    return str(c)


def _terms_text(terms) -> str:
    parts = []
    for t in terms:
        parts.append(f"{t.scale} {t.label()}" if t.scale != 1 else t.label())
    return " + ".join(parts) if parts else "0"


# ---------------------------------------------------------------------------
# commands


def _weight(args) -> DominantWeight:
    return parse_weight(args.weight, args.n)


def cmd_decompose(args) -> dict:
    rho = _weight(args)
    dec = decompose(rho)
    rows = []
    for s in dec.summands:
        sign, i = s.shift
        shift = "rho" if sign == 0 else f"rho{'+' if sign > 0 else '-'}mu_{i + 1}"
        rows.append([s.lam, s.dimension, s.conformal_weight, s.translated_weight, s.pf_eigenvalue, shift])
    meta = {"n": rho.n, "weight": rho, "dim": dim(rho), "summands": len(dec.summands),
            "exceptional": dec.exceptional}
    return document("decompose", meta, [table("summands", ["lambda", "dim", "w", "w_hat", "pf", "shift"], rows)])


def cmd_casimir(args) -> dict:
    rho = _weight(args)
    rows = [[q, casimir_q(rho, q), casimir_hat_q(rho, q)] for q in range(args.q_max + 1)]
    ident = [[q, verify_c_identity(rho, q)] for q in range((args.q_max - 1) // 2 + 1)]
    meta = {"n": rho.n, "weight": rho, "dim": dim(rho), "c2": casimir2(rho),
            "pf": pfaffian_eigenvalue(rho) if rho.n % 2 == 0 else None}
    return document("casimir", meta, [table("casimir eigenvalues", ["q", "c_q", "c_hat_q"], rows),
                                      table("odd translated identity", ["q", "holds"], ident)])


def _formula_rows(formulas) -> list[list[Any]]:
    return [[f.label, list(f.coefficients), _terms_text(f.rhs), f.dependent] for f in formulas]


def cmd_bw(args) -> dict:
    rho = _weight(args)
    dec = decompose(rho)
    half = len(dec.summands) // 2
    formulas = [bochner.laplacian_formula(rho)] + [bochner.even_family(rho, q) for q in range(1, half + 1)]
    if rho.n % 2 == 0:
        formulas.append(bochner.pf_formula(rho))
    if dec.exceptional:
        formulas.append(bochner.exceptional_formula(rho))
    if args.include_dependent:
        formulas += [bochner.odd_family(rho, q) for q in range(half + 1)]
    cert = bochner.independent_family(rho, check=False)
    tables = [
        table("summands", ["index", "lambda", "w", "w_hat"],
              [[i + 1, s.lam, s.conformal_weight, s.translated_weight] for i, s in enumerate(dec.summands)]),
        table("formulas", ["label", "coefficients", "rhs", "dependent"], _formula_rows(formulas)),
    ]
    if rho.n == 4:
        tables.append(table("four-dimensional rows", ["label", "coefficients", "rhs", "dependent"],
                            _formula_rows(bochner.fourdim_rows(rho))))
    try:
        red = bochner.pf_family_reduction(rho)
    except (bochner.WeightMismatch, bochner.OddDimension):
        red = None
    if red is not None:
        tables.append(table("pf-family reduction", ["p", "operator", "kappa", "weyl", "proportional"],
                            [[red.p, red.operator_coefficient, red.kappa_coefficient, red.weyl_coefficient,
                              red.proportional]]))
    meta = {"n": rho.n, "weight": rho, "summands": len(dec.summands), "exceptional": dec.exceptional}
    extra = {"certificate": {"rank": cert.rank, "expected": cert.expected,
                             "rank_without_exceptional": cert.rank_without_exceptional,
                             "independent": [f.label for f in cert.formulas]}}
    return document("bw", meta, tables, extra)


def _classical_weight(args) -> DominantWeight:
    target = args.target
    n = args.n
    if target == "fourdim":
        if args.k is None or args.l is None:
            raise UsageError("fourdim needs --k and --l")
        return bochner.fourdim_weight(args.k, args.l)
    if n is None:
        raise UsageError(f"{target} needs --n")
    if args.weight is not None:
        return parse_weight(args.weight, n)
    if target == "spinor":
        return spinor_weight(n)
    if target == "forms":
        if args.p is None:
            raise UsageError("forms needs --p")
        return fundamental(n, int(args.p))
    if target == "pf-family":
        if args.p is None:
            raise UsageError("pf-family needs --p")
        return validate_weight([Fraction(args.p)] * (n // 2), n)
    if target == "weyl":
        return validate_weight([2, 2] + [0] * (n // 2 - 2), n)
    raise UsageError(f"{target} needs --weight")


def cmd_classical(args) -> dict:
    rho = _classical_weight(args)
    tab = bochner.normalize_against(rho, args.target)
    ops = [[name, [k + 1 for k in idx] if isinstance(idx, tuple) else idx + 1, square]
           for name, idx, square in tab.operators]
    idents = []
    for ident in tab.identities:
        lhs = " + ".join(f"{c} {name}*{name}" for name, c in ident.lhs)
        idents.append([ident.label, lhs, _terms_text(ident.rhs)])
    tables = [
        table("operators", ["name", "summand", "normalization"], ops),
        table("rows", ["label", "coefficients", "rhs", "dependent"], _formula_rows(tab.rows)),
        table("identities", ["label", "lhs", "rhs"], idents),
        table("constants", ["name", "value"], [[k, v] for k, v in tab.constants]),
    ]
    return document("classical", {"target": tab.target, "n": rho.n, "weight": rho}, tables)


def parse_range(text: str) -> list[int]:
    out: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if ".." in part:
            a, b = part.split("..")
            out += list(range(int(a), int(b) + 1))
        elif part:
            out.append(int(part))
    if any(n < 3 for n in out):
        raise UsageError("n must be at least 3")
    return out


def cmd_verify(args) -> tuple[dict, int]:
    chosen = list(suites.SUITES) if args.suite == "all" else [args.suite]
    n_values = parse_range(args.n) if args.n else None
    tasks = suites.plan(chosen, n_values, args.q_max, args.weight_budget, args.seed, args.samples)
    report = suites.run(tasks, args.jobs)
    rows = []
    for cell in report["cells"]:
        if cell["skipped"]:
            rows.append([cell["suite"], cell["n"], cell["item"], "skipped", "", cell["skipped"]])
        for ch in cell["checks"]:
            rows.append([cell["suite"], cell["n"], cell["item"], ch["name"],
                         "pass" if ch["passed"] else "FAIL", ch["detail"]])
    for cell in report["cells"]:
        cell.pop("seconds", None)
        if cell["skipped"]:
            print(f"warning: skipped {cell['skipped']}", file=sys.stderr)
    meta = {"suite": args.suite, "passed": report["passed"], "checks": report["checks"],
            "failures": report["failures"], "skipped": report["skipped"]}
    doc = document("verify", meta, [table("checks", ["suite", "n", "item", "check", "result", "detail"], rows)])
    return doc, EXIT_OK if report["passed"] else EXIT_FAIL


def cmd_export_rep(args) -> dict:
    from .oracle.reps import build_rep
    from .oracle.serialize import rep_to_json

    rho = _weight(args)
    return rep_to_json(build_rep(rho, args.weight_budget))


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "markdown", "csv"), default="json")
    common.add_argument("--approx", action="store_true", help="render non-integers as 12-digit decimals")

    parser = argparse.ArgumentParser(prog="weitzenboeck", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def with_weight(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--weight", default="0", help='comma-separated rationals, e.g. "1,1/2"; zero-padded')

    p = sub.add_parser("decompose", parents=[common], help="summands of V_rho (x) C^n")
    with_weight(p)
    p = sub.add_parser("casimir", parents=[common], help="higher Casimir eigenvalues")
    with_weight(p)
    p.add_argument("--q-max", type=int, default=8)
    p = sub.add_parser("bw", parents=[common], help="Bochner-Weitzenboeck coefficient rows")
    with_weight(p)
    p.add_argument("--include-dependent", action="store_true")
    p = sub.add_parser("classical", parents=[common], help="normalized classical tables")
    p.add_argument("target", choices=("spinor", "forms", "pf-family", "weyl", "fourdim", "exceptional"))
    p.add_argument("--n", type=int)
    p.add_argument("--p")
    p.add_argument("--k", type=int)
    p.add_argument("--l", type=int)
    p.add_argument("--weight")
    p = sub.add_parser("verify", parents=[common], help="run verification suites")
    p.add_argument("--suite", choices=suites.SUITES + ("all",), default="all")
    p.add_argument("--n", help='values of n, e.g. "3..8" or "4,6"')
    p.add_argument("--q-max", type=int, default=4)
    p.add_argument("--weight-budget", type=int, default=64)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=20)
    p = sub.add_parser("export-rep", help="matrix realization as JSON")
    with_weight(p)
    p.add_argument("--weight-budget", type=int, default=400)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "verify":
            doc, code = cmd_verify(args)
            emit(doc, args.format, args.approx)
            return code
        if args.command == "export-rep":
            sys.stdout.write(json.dumps(cmd_export_rep(args), indent=2) + "\n")
            return EXIT_OK
        handler = {"decompose": cmd_decompose, "casimir": cmd_casimir, "bw": cmd_bw,
                   "classical": cmd_classical}[args.command]
        emit(handler(args), args.format, args.approx)
        return EXIT_OK
    except (UsageError, WeightError, bochner.WeightMismatch, bochner.UnknownTarget, bochner.NotExceptional,
            bochner.OddDimension, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
