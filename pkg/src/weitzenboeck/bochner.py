"""Bochner-Weitzenboeck coefficient formulas for the gradients attached to V_rho.

A formula is a coefficient vector b over the summands lambda_1 > ... > lambda_N of
V_rho (x) C^n, read as sum_i b_i (D_i)^* D_i, together with a symbolic right-hand
side.  Operators never appear as operators; only their coefficient slots do.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .branching import Decomposition, decompose
from .casimir import casimir2, casimir_hat_q, pfaffian_eigenvalue
from .weights import DominantWeight, HALF, fundamental, validate_weight


class RankDeficit(ArithmeticError):
    pass


class NotExceptional(ValueError):
    pass


class UnknownTarget(ValueError):
    pass


class WeightMismatch(ValueError):
    pass


class OddDimension(ValueError):
    pass


# ---------------------------------------------------------------------------
# right-hand sides

# kinds of symbolic terms:
#   laplacian   nabla^* nabla
#   R_hat (q)   translated curvature endomorphism R_hat^q
#   R (q)       curvature endomorphism R^q (R_hat^1 = R^1)
#   R_pf        Pfaffian curvature endomorphism
#   R_plus, R_minus   the n=4 endomorphisms R^+-
#   kappa       scalar curvature times identity
#   weyl_ee     sum_{ijkl} W_ijkl pi(e_ij e_kl)
#   weyl_pf     sum_{ijkl} W_ijkl pi(pf_ij e_kl)
#   weyl_plus   sum_{ij} W+_ij pi(X+_i X+_j)
TERM_ORDER = ("laplacian", "R_hat", "R", "R_pf", "R_plus", "R_minus", "kappa", "weyl_ee", "weyl_pf", "weyl_plus")


@dataclass(frozen=True)
class CurvatureTerm:
    kind: str
    q: int | None = None
    scale: Fraction = Fraction(1)

    def __post_init__(self):
        if self.kind not in TERM_ORDER:
            raise ValueError(f"unknown term kind {self.kind!r}")
        if self.kind in ("R_hat", "R") and (self.q is None or self.q < 1):
            raise ValueError(f"{self.kind} needs q >= 1")
        object.__setattr__(self, "scale", Fraction(self.scale))

    @property
    def key(self) -> tuple[str, int | None]:
        return (self.kind, self.q)

    def label(self) -> str:
        if self.kind == "R_hat" and self.q == 1:
            return "R^1"
        if self.kind in ("R_hat", "R"):
            return ("R_hat^" if self.kind == "R_hat" else "R^") + str(self.q)
        return {
            "laplacian": "nabla*nabla",
            "R_pf": "R^pf",
            "R_plus": "R^+",
            "R_minus": "R^-",
            "kappa": "kappa",
            "weyl_ee": "sum W_ijkl e_ij e_kl",
            "weyl_pf": "sum W_ijkl pf_ij e_kl",
            "weyl_plus": "sum W+_ij X+_i X+_j",
        }[self.kind]


def _canon(key):
    kind, q = key
    if kind == "R_hat" and q == 1:
        return ("R", 1)
    return key


def combine_terms(groups: Iterable[tuple[Fraction, Sequence[CurvatureTerm]]]) -> tuple[CurvatureTerm, ...]:
    acc: dict[tuple[str, int | None], Fraction] = {}
    for mult, terms in groups:
        for t in terms:
            k = _canon(t.key)
            acc[k] = acc.get(k, Fraction(0)) + Fraction(mult) * t.scale
    keys = sorted((k for k, v in acc.items() if v != 0), key=lambda k: (TERM_ORDER.index(k[0]), k[1] or 0))
    return tuple(CurvatureTerm(k[0], k[1], acc[k]) for k in keys)


def substitute(terms: Sequence[CurvatureTerm], key: tuple[str, int | None],
               replacement: Sequence[CurvatureTerm]) -> tuple[CurvatureTerm, ...]:
    """Replace every occurrence of the term ``key`` by a linear combination."""
    key = _canon(key)
    keep = [t for t in terms if _canon(t.key) != key]
    hits = [t for t in terms if _canon(t.key) == key]
    groups: list[tuple[Fraction, Sequence[CurvatureTerm]]] = [(Fraction(1), keep)]
    for h in hits:
        groups.append((h.scale, replacement))
    return combine_terms(groups)


def terms_dict(terms: Sequence[CurvatureTerm]) -> dict[str, Fraction]:
    return {t.label(): t.scale for t in terms}


# ---------------------------------------------------------------------------
# formulas


@dataclass(frozen=True)
class OperatorTerm:
    kind: str  # "laplacian" | "gradient"
    summand_index: int | None = None

    def __post_init__(self):
        if (self.kind == "gradient") != (self.summand_index is not None):
            raise ValueError("summand_index is required exactly for gradient terms")


@dataclass(frozen=True)
class BWFormula:
    rho: DominantWeight
    coefficients: tuple[Fraction, ...]
    rhs: tuple[CurvatureTerm, ...]
    dependent: bool = False
    label: str = ""

    def __post_init__(self):
        n_summands = len(decompose(self.rho).summands)
        if len(self.coefficients) != n_summands:
            raise ValueError(f"expected {n_summands} coefficients, got {len(self.coefficients)}")

    @property
    def operators(self) -> tuple[OperatorTerm, ...]:
        return tuple(OperatorTerm("gradient", i) for i in range(len(self.coefficients)))

    def scaled(self, s, label: str | None = None) -> "BWFormula":
        s = Fraction(s)
        return BWFormula(self.rho, tuple(s * b for b in self.coefficients),
                         combine_terms([(s, self.rhs)]), self.dependent, label or self.label)


def linear_combination(parts: Sequence[tuple[Fraction, BWFormula]], label: str = "") -> BWFormula:
    rho = parts[0][1].rho
    coeffs = [Fraction(0)] * len(parts[0][1].coefficients)
    for s, f in parts:
        for i, b in enumerate(f.coefficients):
            coeffs[i] += Fraction(s) * b
    rhs = combine_terms([(Fraction(s), f.rhs) for s, f in parts])
    return BWFormula(rho, tuple(coeffs), rhs, False, label)


def laplacian_formula(rho: DominantWeight) -> BWFormula:
    dec = decompose(rho)
    return BWFormula(rho, (Fraction(1),) * len(dec.summands), (CurvatureTerm("laplacian"),), False, "laplacian")


def even_coefficient(rho: DominantWeight, q: int, w_hat: Fraction) -> Fraction:
    return sum((casimir_hat_q(rho, 2 * q - 1 - p) * (-w_hat) ** p for p in range(2 * q)), Fraction(0))


def even_family(rho: DominantWeight, q: int) -> BWFormula:
    if q < 1:
        raise ValueError("even family starts at q = 1")
    dec = decompose(rho)
    coeffs = tuple(even_coefficient(rho, q, s.translated_weight) for s in dec.summands)
    return BWFormula(rho, coeffs, (CurvatureTerm("R_hat", 2 * q),), False, f"even[{q}]")


def odd_family(rho: DominantWeight, q: int) -> BWFormula:
    """Rows for R_hat^{2q+1}; always dependent.  q = 0 is returned in the
    normalized form b = w against -R^1/2."""
    if q < 0:
        raise ValueError("q must be non-negative")
    dec = decompose(rho)
    if q == 0:
        coeffs = tuple(s.conformal_weight for s in dec.summands)
        return BWFormula(rho, coeffs, (CurvatureTerm("R", 1, -HALF),), True, "gauduchon")
    coeffs = []
    for s in dec.summands:
        wh = s.translated_weight
        tail = sum((casimir_hat_q(rho, 2 * q - p) * (-wh) ** p for p in range(2 * q + 1)), Fraction(0))
        coeffs.append(-(2 * wh ** (2 * q + 1) + wh ** (2 * q) - tail))
    return BWFormula(rho, tuple(coeffs), (CurvatureTerm("R_hat", 2 * q + 1),), True, f"odd[{q}]")


def pf_formula(rho: DominantWeight) -> BWFormula:
    if rho.n % 2:
        raise OddDimension(f"the Pfaffian row needs even n, got n={rho.n}")
    dec = decompose(rho)
    pr = pfaffian_eigenvalue(rho)
    coeffs = tuple(2 * (pr - s.pf_eigenvalue) for s in dec.summands)
    return BWFormula(rho, coeffs, (CurvatureTerm("R_pf"),), False, "pf")


def exceptional_formula(rho: DominantWeight) -> BWFormula:
    dec = decompose(rho)
    if not dec.exceptional:
        raise NotExceptional(f"{rho} (n={rho.n}) is not in the exceptional case")
    plus, minus = dec.exceptional_pair
    coeffs = [Fraction(0)] * len(dec.summands)
    coeffs[plus], coeffs[minus] = Fraction(1), Fraction(-1)
    scale = Fraction(-1) / (4 * dec.summands[plus].pf_eigenvalue)
    return BWFormula(rho, tuple(coeffs), (CurvatureTerm("weyl_pf", None, scale),), False, "exceptional")


# ---------------------------------------------------------------------------
# independence


def c_matrix(rho: DominantWeight, q: int) -> list[list[Fraction]]:
    rows = []
    for r in range(1, q + 1):
        row = [Fraction(0)] * (2 * q)
        for p in range(2 * r):
            row[p] = (-1) ** p * casimir_hat_q(rho, 2 * r - 1 - p)
        rows.append(row)
    return rows


def w_matrix(rho: DominantWeight, q: int) -> list[list[Fraction]]:
    wh = decompose(rho).translated_weights()
    return [[w**p for w in wh] for p in range(2 * q)]


@dataclass(frozen=True)
class RankCertificate:
    rho: DominantWeight
    formulas: tuple[BWFormula, ...]
    rank: int
    expected: int
    rank_without_exceptional: int
    c_factor: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    w_factor: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def vandermonde_factors(self):
        return self.c_factor, self.w_factor


def independent_family(rho: DominantWeight, check: bool = True) -> RankCertificate:
    dec = decompose(rho)
    N = len(dec.summands)
    half = N // 2
    even = [even_family(rho, q) for q in range(1, half + 1)]
    stacked = [list(f.coefficients) for f in even]
    C, W = c_matrix(rho, half), w_matrix(rho, half)
    if half and linalg.matmul(C, W) != stacked:
        raise ArithmeticError(f"C(q)W(q) factorization does not reproduce the even rows for {rho}")
    rank_even = linalg.rank(stacked) if stacked else 0

    chosen: list[BWFormula] = []
    kept: list[list[Fraction]] = []
    for f in even:
        trial = kept + [list(f.coefficients)]
        if linalg.rank(trial) == len(trial):
            chosen.append(f)
            kept = trial
    if dec.exceptional:
        exc = exceptional_formula(rho)
        chosen.append(exc)
        kept = kept + [list(exc.coefficients)]
    r = linalg.rank(kept) if kept else 0
    # the rank from the C W product (with the extra row in the exceptional case)
    cw_rows = linalg.matmul(C, W) if half else []
    if dec.exceptional:
        cw_rows = cw_rows + [list(exceptional_formula(rho).coefficients)]
    if (linalg.rank(cw_rows) if cw_rows else 0) != r:
        raise ArithmeticError("stacked rank and factorized rank disagree")
    if check and r != half:
        raise RankDeficit(f"{rho} (n={rho.n}): rank {r}, expected {half}")
    return RankCertificate(rho, tuple(chosen), r, half, rank_even,
                           tuple(tuple(x) for x in C), tuple(tuple(x) for x in W))


def closure_report(rho: DominantWeight, extra: int = 2) -> dict[str, bool]:
    """Span membership of dependent rows and of even rows beyond [N/2].

    The reference span is {Laplacian, even rows q <= [N/2], pf row (n even),
    exceptional row (if present)}.
    """
    dec = decompose(rho)
    half = len(dec.summands) // 2
    base = [laplacian_formula(rho)] + [even_family(rho, q) for q in range(1, half + 1)]
    if rho.n % 2 == 0:
        base.append(pf_formula(rho))
    if dec.exceptional:
        base.append(exceptional_formula(rho))
    rows = [list(f.coefficients) for f in base]
    report = {}
    for q in range(0, half + extra + 1):
        report[f"odd[{q}]"] = linalg.in_span(rows, list(odd_family(rho, q).coefficients))
    for q in range(half + 1, half + extra + 1):
        report[f"even[{q}]"] = linalg.in_span(rows, list(even_family(rho, q).coefficients))
    if rho.n % 2 == 0:
        curvature_rows = [list(f.coefficients) for f in base[1:half + 1]]
        if dec.exceptional:
            curvature_rows.append(list(exceptional_formula(rho).coefficients))
        report["pf in even span"] = linalg.in_span(curvature_rows, list(pf_formula(rho).coefficients))
    return report


# ---------------------------------------------------------------------------
# classical normalizations


@dataclass(frozen=True)
class NormalizedIdentity:
    label: str
    lhs: tuple[tuple[str, Fraction], ...]
    rhs: tuple[CurvatureTerm, ...]
    combination: tuple[tuple[str, Fraction], ...]
    source: BWFormula = field(repr=False)

    @property
    def laplacian_shift(self) -> Fraction:
        return dict(self.combination).get("laplacian", Fraction(0))

    def lhs_dict(self) -> dict[str, Fraction]:
        return dict(self.lhs)

    def rhs_dict(self) -> dict[str, Fraction]:
        return terms_dict(self.rhs)


@dataclass(frozen=True)
class ClassicalTable:
    target: str
    rho: DominantWeight
    # name, summand index (a tuple when one operator covers several summands), normalization square
    operators: tuple[tuple[str, int | tuple[int, ...], Fraction], ...]
    rows: tuple[BWFormula, ...]
    identities: tuple[NormalizedIdentity, ...]
    constants: tuple[tuple[str, Fraction], ...] = ()

    def constant(self, name: str) -> Fraction:
        return dict(self.constants)[name]

    def identity(self, label: str) -> NormalizedIdentity:
        for ident in self.identities:
            if ident.label == label:
                return ident
        raise KeyError(label)


def _normalized(label: str, parts: Sequence[tuple[Fraction, BWFormula]],
                operators: Sequence[tuple[str, int, Fraction]], subject: str | None = None,
                rules: Sequence[tuple[tuple[str, int | None], Sequence[CurvatureTerm]]] = ()) -> NormalizedIdentity:
    f = linear_combination(parts, label)
    lhs = []
    names_used = set()
    for name, idx, square in operators:
        group = idx if isinstance(idx, tuple) else (idx,)
        names_used.update(group)
        vals = {f.coefficients[k] for k in group}
        if len(vals) != 1:
            raise ArithmeticError(f"operator {name} covers summands with different coefficients")
        b = vals.pop() / square
        if b != 0:
            lhs.append((name, b))
    for idx, b in enumerate(f.coefficients):
        if idx not in names_used and b != 0:
            raise ArithmeticError(f"identity {label} involves an unnamed summand {idx}")
    rhs = f.rhs
    for key, repl in rules:
        rhs = substitute(rhs, key, repl)
    if subject is not None:
        s = dict(lhs)[subject]
        lhs = [(k, v / s) for k, v in lhs]
        rhs = combine_terms([(1 / s, rhs)])
        parts = [(Fraction(c) / s, p) for c, p in parts]
    combo = tuple((p.label, Fraction(c)) for c, p in parts)
    return NormalizedIdentity(label, tuple(lhs), rhs, combo, f)


def _r1_spinor(n: int) -> list[CurvatureTerm]:
    # on spinors the Weyl and Einstein contributions to R^1 vanish
    c2 = casimir2(validate_weight([HALF] * (n // 2), n))
    return [CurvatureTerm("kappa", None, c2 / (n * (n - 1)))]


def _require(cond: bool, msg: str):
    if not cond:
        raise WeightMismatch(msg)


def _spinor(rho: DominantWeight) -> ClassicalTable:
    n, m = rho.n, rho.m
    _require(all(x == HALF for x in rho.entries[:-1]) and abs(rho.entries[-1]) == HALF,
             f"{rho} is not a spinor weight")
    dec = decompose(rho)
    _require(len(dec.summands) == 2, "spinor weight must have two summands")
    lap, gau = laplacian_formula(rho), odd_family(rho, 0)
    ops = (("T", 0, Fraction(n, n - 1)), ("D", 1, Fraction(n)))
    rule = [(("R", 1), _r1_spinor(n))]
    ident1 = _normalized("dirac", [(1, lap), (-2, gau)], ops, "D", rule)
    ident2 = _normalized("friedrich", [(Fraction(-2 * n, n - 1), gau)], ops, "D", rule)
    consts = (("R^1/kappa", _r1_spinor(n)[0].scale),
              ("friedrich", dict(ident2.rhs_dict())["kappa"]))
    return ClassicalTable("spinor", rho, ops, (lap, gau), (ident1, ident2), consts)


def _forms(rho: DominantWeight) -> ClassicalTable:
    n, m = rho.n, rho.m
    p = sum(1 for x in rho.entries if x == 1)
    _require(rho == fundamental(n, p) and p >= 1, f"{rho} is not of the form (1_p), p >= 1")
    dec = decompose(rho)
    twistor = [k for k, s in enumerate(dec.summands) if s.shift == (1, 0)]
    codiff = [k for k, s in enumerate(dec.summands) if s.shift == (-1, p - 1)]
    # (p+1)-forms; two summands when they split under the Hodge star
    diff = tuple(k for k in range(len(dec.summands)) if k not in twistor + codiff)
    _require(len(twistor) == 1 and len(codiff) == 1 and 1 <= len(diff) <= 2,
             f"{rho} (n={n}) does not decompose as twistor, d and d*")
    d_idx = diff[0] if len(diff) == 1 else diff
    lap, gau = laplacian_formula(rho), odd_family(rho, 0)
    ops = (("C", twistor[0], Fraction(1)), ("d", d_idx, Fraction(p + 1)), ("d*", codiff[0], Fraction(n - p + 1)))
    normalized_lap = _normalized("laplacian", [(1, lap)], ops, "C")
    normalized_gau = _normalized("gauduchon", [(1, gau)], ops, "C")
    hodge = _normalized("hodge", [(1, lap), (-1, gau)], ops, "d")
    factor = Fraction(n - p + 1, n - p)
    # (d*d + dd*) >= factor * (p/(p+1) d*d + (n-p)/(n-p+1) dd*) = factor (C*C + R^1/2),
    # and R^1 >= r c_2 under the curvature bound R >= r (sphere tensor)
    gallot_meyer = factor * HALF * casimir2(rho)
    consts = (("estimate_factor", factor), ("gallot_meyer", gallot_meyer))
    return ClassicalTable("forms", rho, ops, (lap, gau), (normalized_lap, normalized_gau, hodge), consts)


def _pf_family_p(rho: DominantWeight) -> Fraction:
    n, m = rho.n, rho.m
    _require(n % 2 == 0, "the Pfaffian family needs even n")
    p = rho.entries[0]
    _require(p > 0 and all(x == p for x in rho.entries[:-1]) and abs(rho.entries[-1]) == p,
             f"{rho} is not of the form (p_(m-1), +-p)")
    return p


@dataclass(frozen=True)
class PfFamilyReduction:
    rho: DominantWeight
    p: Fraction
    operator_coefficient: Fraction
    kappa_coefficient: Fraction
    weyl_coefficient: Fraction
    proportional: bool
    identity: NormalizedIdentity


def pf_family_reduction(rho: DominantWeight) -> PfFamilyReduction:
    p = _pf_family_p(rho)
    n, m = rho.n, rho.m
    dec = decompose(rho)
    _require(len(dec.summands) == 2, f"{rho} does not have two summands")
    lap, gau, pfr = laplacian_formula(rho), odd_family(rho, 0), pf_formula(rho)
    r1_row = [-2 * b for b in gau.coefficients]
    pr = pfaffian_eigenvalue(rho)
    proportional = [pr * b for b in r1_row] == [p * (p + m - 1) * b for b in pfr.coefficients]
    ops = (("D1", 0, Fraction(1)), ("D2", 1, Fraction(1)))
    # R^1 has no Einstein part on this family: c_2 kappa / (n(n-1)) + W-part
    r1 = [CurvatureTerm("kappa", None, casimir2(rho) / (n * (n - 1))), CurvatureTerm("weyl_ee", None, HALF)]
    ident = _normalized("reduced", [(1, lap), (-1 / p, gau)], ops, None, [(("R", 1), r1)])
    lhs, rhs = ident.lhs_dict(), ident.rhs_dict()
    _require(set(lhs) == {"D2"} and rhs.get("nabla*nabla") == 1, "reduction did not eliminate D1")
    return PfFamilyReduction(rho, p, lhs["D2"], rhs["kappa"], rhs["sum W_ijkl e_ij e_kl"], proportional, ident)


def _pf_family(rho: DominantWeight) -> ClassicalTable:
    red = pf_family_reduction(rho)
    lap, gau, pfr = laplacian_formula(rho), odd_family(rho, 0), pf_formula(rho)
    ops = (("D1", 0, Fraction(1)), ("D2", 1, Fraction(1)))
    consts = (("operator", red.operator_coefficient), ("kappa", red.kappa_coefficient),
              ("weyl", red.weyl_coefficient), ("proportional", Fraction(int(red.proportional))))
    return ClassicalTable("pf_family", rho, ops, (lap, gau, pfr), (red.identity,), consts)


def _weyl(rho: DominantWeight, keep: Sequence[DominantWeight] | None = None) -> ClassicalTable:
    n = rho.n
    _require(n >= 5 and tuple(rho.entries[:2]) == (2, 2) and all(x == 0 for x in rho.entries[2:]),
             f"{rho} is not the Weyl-tensor weight (2,2) with n >= 5")
    dec = decompose(rho)
    if keep is None:
        keep = [validate_weight([3, 2] + [0] * (rho.m - 2), n), validate_weight([2, 1] + [0] * (rho.m - 2), n)]
    idx = [dec.index(lam) for lam in keep]
    _require(len(idx) == 2, "the Weyl-tensor mask keeps two summands")
    lap, gau = laplacian_formula(rho), odd_family(rho, 0)
    ops = (("D1", idx[0], Fraction(1)), ("D2", idx[1], Fraction(1)))
    # masked summands vanish on the sections considered, so their slots are dropped
    f = linear_combination([(1, lap), (-1 / dec.summands[idx[0]].conformal_weight, gau)], "weyl")
    masked = BWFormula(rho, tuple(b if i in idx else Fraction(0) for i, b in enumerate(f.coefficients)),
                       f.rhs, False, "weyl")
    ident = _normalized("weyl", [(1, masked)], ops)
    consts = (("operator", ident.lhs_dict()["D2"]), ("R^1", ident.rhs_dict()["R^1"]))
    return ClassicalTable("weyl_tensor", rho, ops, (lap, gau), (ident,), consts)


def fourdim_weight(k: int, l: int) -> DominantWeight:
    return validate_weight([Fraction(k + l, 2), Fraction(k - l, 2)], 4)


FOURDIM_RULES = [
    (("R", 1), [CurvatureTerm("R_plus"), CurvatureTerm("R_minus")]),
    (("R_pf", None), [CurvatureTerm("R_plus"), CurvatureTerm("R_minus", None, -1)]),
]


def fourdim_rows(rho: DominantWeight) -> tuple[BWFormula, BWFormula, BWFormula]:
    """Laplacian, -R^+ and -R^- rows for n = 4, built from the Gauduchon and pf rows."""
    _require(rho.n == 4, "four-dimensional rows need n = 4")
    lap, gau, pfr = laplacian_formula(rho), odd_family(rho, 0), pf_formula(rho)
    plus = linear_combination([(1, gau), (-HALF, pfr)], "minus R+")
    minus = linear_combination([(1, gau), (HALF, pfr)], "minus R-")
    plus = BWFormula(rho, plus.coefficients, substitute_all(plus.rhs, FOURDIM_RULES), False, "minus R+")
    minus = BWFormula(rho, minus.coefficients, substitute_all(minus.rhs, FOURDIM_RULES), False, "minus R-")
    return lap, plus, minus


def substitute_all(terms, rules):
    for key, repl in rules:
        terms = substitute(terms, key, repl)
    return terms


def _fourdim(rho: DominantWeight) -> ClassicalTable:
    _require(rho.n == 4, "four-dimensional table needs n = 4")
    k = rho.entries[0] + rho.entries[1]
    l = rho.entries[0] - rho.entries[1]
    rows = fourdim_rows(rho)
    dec = decompose(rho)
    ops = tuple((f"D{i + 1}", i, Fraction(1)) for i in range(len(dec.summands)))
    idents = [_normalized(r.label, [(1, r)], ops) for r in rows]
    consts = [("k", k), ("l", l)]
    return ClassicalTable("fourdim", rho, ops, rows, tuple(idents), tuple(consts))


def _exceptional(rho: DominantWeight) -> ClassicalTable:
    dec = decompose(rho)
    _require(dec.exceptional, f"{rho} (n={rho.n}) is not exceptional")
    plus, minus = dec.exceptional_pair
    exc = exceptional_formula(rho)
    ops = (("D+", plus, Fraction(1)), ("D-", minus, Fraction(1)))
    ident = _normalized("exceptional", [(1, exc)], ops, "D+")
    consts = (("pf(lambda+)", dec.summands[plus].pf_eigenvalue), ("scale", exc.rhs[0].scale))
    return ClassicalTable("exceptional", rho, ops, (exc,), (ident,), consts)


TARGETS = ("spinor", "forms", "pf_family", "weyl_tensor", "fourdim", "exceptional")


def normalize_against(rho: DominantWeight, target: str, **params) -> ClassicalTable:
    target = target.replace("-", "_")
    if target == "weyl":
        target = "weyl_tensor"
    if target == "spinor":
        return _spinor(rho)
    if target == "forms":
        return _forms(rho)
    if target == "pf_family":
        return _pf_family(rho)
    if target == "weyl_tensor":
        return _weyl(rho, params.get("keep"))
    if target == "fourdim":
        return _fourdim(rho)
    if target == "exceptional":
        return _exceptional(rho)
    raise UnknownTarget(f"unknown classical target {target!r}; choose from {', '.join(TARGETS)}")
