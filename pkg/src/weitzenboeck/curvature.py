"""Algebraic curvature tensors and the curvature endomorphisms they induce on a
concrete module.

R[i][j][k][l] is stored 0-based as nested lists of Fraction.  The action on a
module is R(e_i, e_j) = sum_{k<l} R_ijkl pi(e_kl); a round sphere has
R_ijkl = c (delta_il delta_jk - delta_ik delta_jl) with scalar curvature n(n-1)c.
"""
from __future__ import annotations

import functools
import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence

from .exact import GMatrix, linear_combinations
from .oracle.enveloping import e_hat_power, e_power, pf_elements
from .oracle.realization import Module, pairs

Tensor = list  # n x n x n x n nested lists of Fraction


class CurvatureError(ValueError):
    pass


class SymmetryViolation(CurvatureError):
    pass


class BianchiViolation(CurvatureError):
    pass


class WrongDimension(CurvatureError):
    pass


class IndexOutOfRange(IndexError):
    pass


class OddDimension(CurvatureError):
    pass


def zeros4(n: int) -> Tensor:
    return [[[[Fraction(0)] * n for _ in range(n)] for _ in range(n)] for _ in range(n)]


def _delta(a: int, b: int) -> int:
    return 1 if a == b else 0


def _indices(n: int):
    return itertools.product(range(n), repeat=4)


@dataclass(frozen=True, eq=False)
class AlgebraicCurvature:
    n: int
    R: Tensor

    def __post_init__(self):
        n = self.n
        if len(self.R) != n:
            raise WrongDimension(f"tensor has {len(self.R)} slots, expected {n}")
        R = self.R
        for i, j, k, l in _indices(n):
            x = R[i][j][k][l]
            if x != -R[j][i][k][l] or x != -R[i][j][l][k] or x != R[k][l][i][j]:
                raise SymmetryViolation(f"symmetries fail at ({i + 1},{j + 1},{k + 1},{l + 1})")
            if x + R[j][k][i][l] + R[k][i][j][l] != 0:
                raise BianchiViolation(f"first Bianchi identity fails at ({i + 1},{j + 1},{k + 1},{l + 1})")

    @classmethod
    def trusted(cls, n: int, R: Tensor) -> "AlgebraicCurvature":
        """Wrap a tensor already known to have the curvature symmetries."""
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "R", R)
        return obj

    @functools.cached_property
    def decomposition(self) -> "CurvatureDecomposition":
        return _decompose(self)

    def __getitem__(self, idx: tuple[int, int, int, int]) -> Fraction:
        i, j, k, l = idx
        return self.R[i][j][k][l]

    def __eq__(self, other) -> bool:
        return isinstance(other, AlgebraicCurvature) and self.n == other.n and self.R == other.R

    def __add__(self, other: "AlgebraicCurvature") -> "AlgebraicCurvature":
        return from_function(self.n, lambda i, j, k, l: self.R[i][j][k][l] + other.R[i][j][k][l])

    def __sub__(self, other: "AlgebraicCurvature") -> "AlgebraicCurvature":
        return from_function(self.n, lambda i, j, k, l: self.R[i][j][k][l] - other.R[i][j][k][l])

    def scale(self, s) -> "AlgebraicCurvature":
        s = Fraction(s)
        return from_function(self.n, lambda i, j, k, l: s * self.R[i][j][k][l])

    def ricci(self) -> list[list[Fraction]]:
        n, R = self.n, self.R
        return [[sum((R[i][k][k][j] for k in range(n)), Fraction(0)) for j in range(n)] for i in range(n)]

    def kappa(self) -> Fraction:
        ric = self.ricci()
        return sum((ric[i][i] for i in range(self.n)), Fraction(0))

    def is_zero(self) -> bool:
        return all(self.R[i][j][k][l] == 0 for i, j, k, l in _indices(self.n))

    # -- JSON: canonical entries i<j, k<l, (i,j) <= (k,l), 1-based --------
    def to_json(self) -> dict:
        rows = []
        for (i, j), (k, l) in _canonical_pairs(self.n):
            x = self.R[i][j][k][l]
            if x:
                rows.append([i + 1, j + 1, k + 1, l + 1, str(x)])
        return {"n": self.n, "R": rows}

    @classmethod
    def from_json(cls, doc: dict) -> "AlgebraicCurvature":
        n = int(doc["n"])
        R = zeros4(n)
        for i, j, k, l, val in doc["R"]:
            i, j, k, l = i - 1, j - 1, k - 1, l - 1
            if not (0 <= i < j < n and 0 <= k < l < n and (i, j) <= (k, l)):
                raise IndexOutOfRange(f"non-canonical index ({i + 1},{j + 1},{k + 1},{l + 1})")
            x = Fraction(val)
            for a, b, c, d, s in ((i, j, k, l, 1), (j, i, k, l, -1), (i, j, l, k, -1), (j, i, l, k, 1)):
                R[a][b][c][d] = s * x
                R[c][d][a][b] = s * x
        return cls(n, R)


def _canonical_pairs(n: int):
    prs = list(pairs(n))
    for a, p in enumerate(prs):
        for q in prs[a:]:
            yield p, q


def from_function(n: int, f, check: bool = True) -> AlgebraicCurvature:
    R = zeros4(n)
    for i, j, k, l in _indices(n):
        R[i][j][k][l] = Fraction(f(i, j, k, l))
    return AlgebraicCurvature(n, R) if check else AlgebraicCurvature.trusted(n, R)


def sphere_curvature(n: int, kappa=None) -> AlgebraicCurvature:
    """Constant curvature with the given scalar curvature (default n(n-1), i.e. c = 1)."""
    c = Fraction(1) if kappa is None else Fraction(kappa) / (n * (n - 1))
    return from_function(n, lambda i, j, k, l: c * (_delta(i, l) * _delta(j, k) - _delta(i, k) * _delta(j, l)), False)


def einstein_part(n: int, E: Sequence[Sequence[Fraction]]) -> AlgebraicCurvature:
    """K_ijkl = E_ik d_jl + E_jl d_ik - E_il d_jk - E_jk d_il."""
    return from_function(n, lambda i, j, k, l: E[i][k] * _delta(j, l) + E[j][l] * _delta(i, k)
                         - E[i][l] * _delta(j, k) - E[j][k] * _delta(i, l), False)


def random_curvature(n: int, seed: int, bound: int = 5) -> AlgebraicCurvature:
    """Random integer tensor projected onto the curvature symmetries: antisymmetrize
    each pair, symmetrize the pairs, subtract the cyclic (Bianchi) average."""
    rng = random.Random(seed)
    T = [[[[Fraction(rng.randint(-bound, bound)) for _ in range(n)] for _ in range(n)] for _ in range(n)]
         for _ in range(n)]
    A = zeros4(n)
    for i, j, k, l in _indices(n):
        A[i][j][k][l] = (T[i][j][k][l] - T[j][i][k][l] - T[i][j][l][k] + T[j][i][l][k]) / 4
    S = zeros4(n)
    for i, j, k, l in _indices(n):
        S[i][j][k][l] = (A[i][j][k][l] + A[k][l][i][j]) / 2
    R = zeros4(n)
    for i, j, k, l in _indices(n):
        R[i][j][k][l] = S[i][j][k][l] - (S[i][j][k][l] + S[j][k][i][l] + S[k][i][j][l]) / 3
    return AlgebraicCurvature(n, R)


def random_traceless_symmetric(n: int, seed: int, bound: int = 5) -> list[list[Fraction]]:
    rng = random.Random(seed)
    E = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            E[i][j] = E[j][i] = Fraction(rng.randint(-bound, bound))
    tr = sum((E[i][i] for i in range(n)), Fraction(0)) / n
    for i in range(n):
        E[i][i] -= tr
    return E


def einstein_perturbation(R: AlgebraicCurvature, E) -> AlgebraicCurvature:
    """R + K(E); E must be symmetric and trace-free, so only the Einstein part moves."""
    n = R.n
    if any(E[i][j] != E[j][i] for i in range(n) for j in range(n)):
        raise SymmetryViolation("E is not symmetric")
    if sum((E[i][i] for i in range(n)), Fraction(0)) != 0:
        raise SymmetryViolation("E is not trace-free")
    return R + einstein_part(n, E)


# ---------------------------------------------------------------------------
# Weyl / Einstein / scalar split


@dataclass(frozen=True, eq=False)
class CurvatureDecomposition:
    n: int
    W: Tensor
    E: list[list[Fraction]]
    kappa: Fraction
    K: Tensor
    S: Tensor

    @functools.cached_property
    def weyl(self) -> AlgebraicCurvature:
        return AlgebraicCurvature.trusted(self.n, self.W)

    def reassemble(self) -> AlgebraicCurvature:
        n = self.n
        return from_function(n, lambda i, j, k, l: self.W[i][j][k][l] + self.K[i][j][k][l] + self.S[i][j][k][l])

    def weyl_traceless(self) -> bool:
        n = self.n
        return all(sum((self.W[i][j][i][l] for i in range(n)), Fraction(0)) == 0 for j in range(n) for l in range(n))

    def einstein_traceless(self) -> bool:
        n = self.n
        sym = all(self.E[i][j] == self.E[j][i] for i in range(n) for j in range(n))
        return sym and sum((self.E[i][i] for i in range(n)), Fraction(0)) == 0


def decompose_curvature(R: AlgebraicCurvature) -> CurvatureDecomposition:
    return R.decomposition


def _decompose(R: AlgebraicCurvature) -> CurvatureDecomposition:
    n = R.n
    ric = R.ricci()
    kappa = sum((ric[i][i] for i in range(n)), Fraction(0))
    E = [[(kappa / n * _delta(i, j) - ric[i][j]) / (n - 2) for j in range(n)] for i in range(n)]
    K = einstein_part(n, E).R
    S = sphere_curvature(n, kappa).R
    W = zeros4(n)
    for i, j, k, l in _indices(n):
        W[i][j][k][l] = R.R[i][j][k][l] - K[i][j][k][l] - S[i][j][k][l]
    dec = CurvatureDecomposition(n, W, E, kappa, K, S)
    if n == 3 and not AlgebraicCurvature(n, W).is_zero():
        raise ArithmeticError("the Weyl part of a three-dimensional tensor came out nonzero")
    return dec


# ---------------------------------------------------------------------------
# Actions on modules


def _pair_coefficients(R: AlgebraicCurvature, i: int, j: int) -> list[Fraction]:
    return [R.R[i][j][k][l] for k, l in pairs(R.n)]


def curvature_actions(R: AlgebraicCurvature, module: Module) -> dict[tuple[int, int], GMatrix]:
    """All R(e_i, e_j), i != j, from a single stacked product."""
    if R.n != module.n:
        raise WrongDimension(f"tensor for n={R.n} on a module for n={module.n}")
    key = ("curv", id(R))
    hit = module.cache.get(key)
    if hit is not None and hit[0] is R:
        return hit[1]
    gens = [module.generators[p] for p in pairs(R.n)]
    idx = list(pairs(R.n))
    mats = linear_combinations(gens, [_pair_coefficients(R, i, j) for i, j in idx])
    out = {}
    for (i, j), m in zip(idx, mats):
        out[(i, j)] = m
        out[(j, i)] = -m
    module.cache[key] = (R, out)
    return out


def curvature_action(R: AlgebraicCurvature, module: Module, i: int, j: int) -> GMatrix:
    n = R.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexOutOfRange(f"index ({i + 1},{j + 1}) outside 1..{n}")
    if i == j:
        return GMatrix.zeros(module.dim)
    return curvature_actions(R, module)[(i, j)]


def _contract(module: Module, left, R: AlgebraicCurvature) -> GMatrix:
    acts = curvature_actions(R, module)
    n = module.n
    out = GMatrix.zeros(module.dim)
    for i in range(n):
        for j in range(n):
            if i != j:
                out = out + left(i, j) @ acts[(i, j)]
    return out


def curvature_endomorphism_q(R: AlgebraicCurvature, module: Module, q: int) -> GMatrix:
    return _contract(module, lambda i, j: e_power(module, i, j, q), R)


def curvature_endomorphism_hat_q(R: AlgebraicCurvature, module: Module, q: int) -> GMatrix:
    return _contract(module, lambda i, j: e_hat_power(module, i, j, q), R)


def curvature_endomorphism_pf(R: AlgebraicCurvature, module: Module) -> GMatrix:
    if module.n % 2:
        raise OddDimension("R^pf needs even n")
    _, tab = pf_elements(module)
    return _contract(module, lambda i, j: tab[(i, j)], R)


def hat_from_plain(R: AlgebraicCurvature, module: Module, q: int) -> GMatrix:
    """sum_p binom(q,p) ((n-1)/2)^(q-p) R^p."""
    s = Fraction(module.n - 1, 2)
    out = GMatrix.zeros(module.dim)
    for p in range(q + 1):
        out = out + curvature_endomorphism_q(R, module, p).scale(comb(q, p) * s ** (q - p))
    return out


def weyl_contraction(W: Tensor, module: Module, left) -> GMatrix:
    """(1/2) sum_ijkl W_ijkl left(i,j) pi(e_kl) = sum_{i,j} left(i,j) sum_{k<l} W_ijkl pi(e_kl)."""
    if isinstance(W, AlgebraicCurvature):
        return _contract(module, left, W)
    return _contract(module, left, _loose(module.n, W))


def _loose(n: int, T: Tensor) -> AlgebraicCurvature:
    # W inherits every curvature symmetry from R
    return AlgebraicCurvature.trusted(n, T)


def weyl_ee(R: AlgebraicCurvature, module: Module) -> GMatrix:
    """(1/2) sum W_ijkl pi(e_ij e_kl)."""
    return weyl_contraction(decompose_curvature(R).weyl, module, module.e)


def weyl_pf(R: AlgebraicCurvature, module: Module) -> GMatrix:
    """(1/2) sum W_ijkl pi(pf_ij e_kl)."""
    _, tab = pf_elements(module)
    return weyl_contraction(decompose_curvature(R).weyl, module, lambda i, j: tab[(i, j)])


def split_action(R: AlgebraicCurvature, module: Module, i: int, j: int) -> GMatrix:
    """R(e_i,e_j) rebuilt from (W, E, kappa)."""
    n = module.n
    dec = decompose_curvature(R)
    out = curvature_action(dec.weyl, module, i, j)
    for k in range(n):
        out = out + module.e(k, j).scale(dec.E[i][k]) - module.e(k, i).scale(dec.E[j][k])
    return out - module.e(i, j).scale(dec.kappa / (n * (n - 1)))


def split_endomorphism_q(R: AlgebraicCurvature, module: Module, q: int, casimir_next) -> GMatrix:
    """R^q from its Weyl, Einstein and scalar parts."""
    n = module.n
    dec = decompose_curvature(R)
    out = weyl_contraction(dec.weyl, module, lambda i, j: e_power(module, i, j, q))
    for i in range(n):
        for j in range(n):
            if dec.E[i][j]:
                term = e_power(module, i, j, q + 1).scale(2) + e_power(module, i, j, q).scale(n)
                out = out - term.scale(dec.E[i][j])
    return out + module.identity().scale(Fraction(casimir_next) * dec.kappa / (n * (n - 1)))


def is_self_adjoint(module: Module, a: GMatrix) -> bool:
    return module.is_self_adjoint(a)


# ---------------------------------------------------------------------------
# Dimension four


def x_basis() -> tuple[list[dict[tuple[int, int], Fraction]], list[dict[tuple[int, int], Fraction]]]:
    """X_i^+ and X_i^- as coefficient maps on e_kl (k<l, 0-based)."""
    h = Fraction(1, 2)
    plus, minus = [], []
    for s, out in ((1, plus), (-1, minus)):
        out.append({(0, 3): h, (1, 2): s * h})
        # -(e_13 + s e_42)/2 = -(1/2) e_13 + (s/2) e_24
        out.append({(0, 2): -h, (1, 3): s * h})
        out.append({(0, 1): h, (2, 3): s * h})
    return plus, minus


def _x_matrix() -> list[list[Fraction]]:
    """Q with columns X_1^+, X_2^+, X_3^+, X_1^-, X_2^-, X_3^- over the e_kl basis."""
    plus, minus = x_basis()
    cols = plus + minus
    prs = list(pairs(4))
    return [[col.get(p, Fraction(0)) for col in cols] for p in prs]


def curvature_operator(R: AlgebraicCurvature) -> list[list[Fraction]]:
    """The operator e_ij -> (1/2) sum R_ijkl e_kl in the X basis, M[b][a] = coefficient of X_b
    in R_T(X_a)."""
    if R.n != 4:
        raise WrongDimension("the self-dual split needs n = 4")
    prs = list(pairs(4))
    Q = _x_matrix()
    Rm = [[R.R[i][j][k][l] for (k, l) in prs] for (i, j) in prs]
    M = [[Fraction(0)] * 6 for _ in range(6)]
    for b in range(6):
        for a in range(6):
            M[b][a] = 2 * sum((Q[p][b] * Rm[p][r] * Q[r][a] for p in range(6) for r in range(6)), Fraction(0))
    return M


@dataclass(frozen=True)
class FourDimSplit:
    """W^+ and W^- are traceless symmetric; K has rows indexed by the self-dual basis."""

    Wplus: tuple[tuple[Fraction, ...], ...]
    Wminus: tuple[tuple[Fraction, ...], ...]
    K: tuple[tuple[Fraction, ...], ...]
    kappa: Fraction

    def matrix(self) -> list[list[Fraction]]:
        M = [[Fraction(0)] * 6 for _ in range(6)]
        for a in range(3):
            for b in range(3):
                M[a][b] = self.Wplus[a][b]
                M[3 + a][3 + b] = self.Wminus[a][b]
                M[a][3 + b] = self.K[a][b]
                M[3 + b][a] = self.K[a][b]
            M[a][a] -= self.kappa / 12
            M[3 + a][3 + a] -= self.kappa / 12
        return M


def four_dim_split(R: AlgebraicCurvature) -> FourDimSplit:
    M = curvature_operator(R)
    kappa = R.kappa()
    shift = kappa / 12
    wp = tuple(tuple(M[a][b] + (shift if a == b else 0) for b in range(3)) for a in range(3))
    wm = tuple(tuple(M[3 + a][3 + b] + (shift if a == b else 0) for b in range(3)) for a in range(3))
    K = tuple(tuple(M[a][3 + b] for b in range(3)) for a in range(3))
    return FourDimSplit(wp, wm, K, kappa)


def assemble_four_dim(split: FourDimSplit) -> AlgebraicCurvature:
    """Inverse of four_dim_split: R_{(ij),(kl)} = 2 (Q M Q^t)."""
    for W in (split.Wplus, split.Wminus):
        if sum(W[a][a] for a in range(3)) != 0 or any(W[a][b] != W[b][a] for a in range(3) for b in range(3)):
            raise SymmetryViolation("W^+ and W^- must be symmetric and trace-free")
    M = split.matrix()
    Q = _x_matrix()
    prs = list(pairs(4))
    R = zeros4(4)
    for p, (i, j) in enumerate(prs):
        for r, (k, l) in enumerate(prs):
            x = 2 * sum((Q[p][a] * M[a][b] * Q[r][b] for a in range(6) for b in range(6)), Fraction(0))
            for a_, b_, c_, d_, s in ((i, j, k, l, 1), (j, i, k, l, -1), (i, j, l, k, -1), (j, i, l, k, 1)):
                R[a_][b_][c_][d_] = s * x
    return AlgebraicCurvature(4, R)


def _x_ops(module: Module) -> tuple[list[GMatrix], list[GMatrix]]:
    plus, minus = x_basis()
    prs = list(pairs(4))
    gens = [module.generators[p] for p in prs]
    coeffs = [[x.get(p, Fraction(0)) for p in prs] for x in plus + minus]
    mats = linear_combinations(gens, coeffs)
    return mats[:3], mats[3:]


def four_dim_endomorphisms(R: AlgebraicCurvature, module: Module) -> tuple[GMatrix, GMatrix]:
    """R^+ and R^- as 4 sum_i pi(X_i^pm) pi(R_T(X_i^pm))."""
    if R.n != 4 or module.n != 4:
        raise WrongDimension("R^+ and R^- need n = 4")
    M = curvature_operator(R)
    xp, xm = _x_ops(module)
    xs = xp + xm
    out = []
    for block in (range(3), range(3, 6)):
        acc = GMatrix.zeros(module.dim)
        for a in block:
            image = GMatrix.zeros(module.dim)
            for b in range(6):
                if M[b][a]:
                    image = image + xs[b].scale(M[b][a])
            acc = acc + xs[a] @ image
        out.append(acc.scale(4))
    return out[0], out[1]


def four_dim_from_split(split: FourDimSplit, module: Module, k: int, l: int) -> tuple[GMatrix, GMatrix]:
    """R^pm from W^pm, K and the scalar parts k(k+2) kappa/12, l(l+2) kappa/12."""
    xp, xm = _x_ops(module)
    mixed = GMatrix.zeros(module.dim)
    for a in range(3):
        for b in range(3):
            if split.K[a][b]:
                mixed = mixed + (xp[a] @ xm[b]).scale(split.K[a][b])
    res = []
    for xs, W, t in ((xp, split.Wplus, k), (xm, split.Wminus, l)):
        acc = GMatrix.zeros(module.dim)
        for a in range(3):
            for b in range(3):
                if W[a][b]:
                    acc = acc + (xs[a] @ xs[b]).scale(W[a][b])
        scalar = Fraction(t * (t + 2), 12) * split.kappa
        res.append((acc + mixed).scale(4) + module.identity().scale(scalar))
    return res[0], res[1]


def self_dual_weyl(W: Sequence[Sequence[Fraction]]) -> AlgebraicCurvature:
    zero = tuple(tuple(Fraction(0) for _ in range(3)) for _ in range(3))
    return assemble_four_dim(FourDimSplit(tuple(tuple(Fraction(x) for x in r) for r in W), zero, zero, Fraction(0)))
