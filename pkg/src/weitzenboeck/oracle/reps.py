"""Concrete modules: trivial, natural, exterior powers, spinors, and general
irreducibles cut out of (previous irreducible) (x) C^n by spectral projectors."""
from __future__ import annotations

import functools
import itertools
import json
import os
from fractions import Fraction
from pathlib import Path

from ..branching import decompose
from ..casimir import casimir2, pfaffian_eigenvalue
from ..exact import GaussianRational, GMatrix
from ..weights import DominantWeight, HALF, dim, fundamental, inner, spinor_weight, zero
from .realization import (
    AmbientMissing,
    BudgetExceeded,
    EigenvalueCollision,
    Module,
    ReducibleRequest,
    RepRealization,
    pairs,
)

DEFAULT_BUDGET = 400
CACHE_ENV = "WEITZ_CACHE_DIR"


def _realize(module: Module, rho: DominantWeight, label: str = "") -> RepRealization:
    rep = RepRealization(module.n, module.generators, module.gram, label or module.label, rho=rho)
    return rep.validate()


def trivial_rep(n: int) -> RepRealization:
    gens = {p: GMatrix.zeros(1) for p in pairs(n)}
    return _realize(Module(n, gens, GMatrix.identity(1), "trivial"), zero(n))


def natural_generators(n: int) -> dict[tuple[int, int], GMatrix]:
    # e_ij sends e_i to e_j and e_j to -e_i
    gens = {}
    for i, j in pairs(n):
        gens[(i, j)] = GMatrix.from_entries(n, n, {(j, i): 1, (i, j): -1})
    return gens


def natural_rep(n: int) -> RepRealization:
    return _realize(Module(n, natural_generators(n), GMatrix.identity(n), "natural"), fundamental(n, 1))


def _exterior_module(n: int, p: int) -> Module:
    basis = list(itertools.combinations(range(n), p))
    index = {s: k for k, s in enumerate(basis)}
    size = len(basis)
    gens = {}
    for i, j in pairs(n):
        entries: dict[tuple[int, int], int] = {}
        for col, s in enumerate(basis):
            for pos, k in enumerate(s):
                # derivation: replace e_k by its image
                for src, dst, coeff in ((i, j, 1), (j, i, -1)):
                    if k != src or dst in s:
                        continue
                    new = list(s)
                    new[pos] = dst
                    order = sorted(range(p), key=lambda t: new[t])
                    sign = _perm_sign(order)
                    row = index[tuple(sorted(new))]
                    entries[(row, col)] = entries.get((row, col), 0) + coeff * sign
        gens[(i, j)] = GMatrix.from_entries(size, size, entries)
    return Module(n, gens, GMatrix.identity(size), f"exterior {p}")


def _perm_sign(order: list[int]) -> int:
    sign = 1
    seen = [False] * len(order)
    for start in range(len(order)):
        if seen[start]:
            continue
        length = 0
        k = start
        while not seen[k]:
            seen[k] = True
            k = order[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def exterior_rep(n: int, p: int) -> RepRealization:
    m = n // 2
    if p == 0:
        return trivial_rep(n)
    if n % 2 == 0 and p == m:
        raise ReducibleRequest(f"the {p}-forms split for n={n}; use middle_forms")
    if not 1 <= p <= m:
        raise ValueError(f"need 0 <= p <= {m}, got {p}")
    return _realize(_exterior_module(n, p), fundamental(n, p))


def middle_forms(n: int) -> dict[int, RepRealization]:
    """The two halves of the middle exterior power for even n, keyed by the sign
    of the pf eigenvalue (+1 for (1,...,1), -1 for (1,...,1,-1))."""
    from .enveloping import pf_elements

    if n % 2:
        raise ValueError("middle_forms needs even n")
    m = n // 2
    full = _exterior_module(n, m)
    pf, _ = pf_elements(full)
    out = {}
    for sign in (1, -1):
        ents = [Fraction(1)] * m
        ents[-1] = Fraction(sign)
        lam = DominantWeight(tuple(ents), n)
        val = pfaffian_eigenvalue(lam)
        proj = (pf + full.identity().scale(val)).scale(Fraction(1, 2) / val)
        out[sign] = _realize(restrict(full, proj, f"exterior {m}{'+' if sign > 0 else '-'}"), lam)
    return out


# ---------------------------------------------------------------------------
# Spinors


_SIGMA = {
    1: GMatrix.from_rows([[0, 1], [1, 0]]),
    2: GMatrix.from_rows([[0, GaussianRational(0, -1)], [GaussianRational(0, 1), 0]]),
    3: GMatrix.from_rows([[1, 0], [0, -1]]),
}


def _kron_all(factors: list[GMatrix]) -> GMatrix:
    out = factors[0]
    for f in factors[1:]:
        out = out.kron(f)
    return out


def gamma_matrices(n: int) -> list[GMatrix]:
    """gamma_k of size 2^m with gamma_i gamma_j + gamma_j gamma_i = -2 delta_ij."""
    m = n // 2
    eye = GMatrix.identity(2)
    herm = []
    for k in range(m):
        for s in (1, 2):
            herm.append(_kron_all([_SIGMA[3]] * k + [_SIGMA[s]] + [eye] * (m - k - 1)))
    if n % 2:
        herm.append(_kron_all([_SIGMA[3]] * m))
    i = GaussianRational(0, 1)
    return [g.scale(i) for g in herm]


def chirality(n: int) -> GMatrix:
    return _kron_all([_SIGMA[3]] * (n // 2))


def dirac_module(n: int) -> Module:
    gam = gamma_matrices(n)
    gens = {(i, j): (gam[i] @ gam[j]).scale(HALF) for i, j in pairs(n)}
    size = 2 ** (n // 2)
    return Module(n, gens, GMatrix.identity(size), "dirac")


def dirac_rep(n: int) -> tuple[Module, GMatrix]:
    """The full spinor module and, for even n, the projector onto the half with
    positive pf eigenvalue (identity for odd n)."""
    mod = dirac_module(n)
    if n % 2:
        return mod, mod.identity()
    return mod, _half_spin_projector(mod, 1)


def _half_spin_projector(mod: Module, sign: int) -> GMatrix:
    from .enveloping import pf_elements

    n = mod.n
    chi = chirality(n)
    pf, _ = pf_elements(mod)
    # find which chirality carries the requested pf sign
    target = pfaffian_eigenvalue(spinor_weight(n, sign))
    for s in (1, -1):
        proj = (mod.identity() + chi.scale(s)).scale(HALF)
        if pf @ proj == proj.scale(target):
            return proj
    raise EigenvalueCollision("chirality halves do not match the pf eigenvalues")


def spinor_rep(n: int, sign: int = 1) -> RepRealization:
    """Spin (odd n) or the half-spin module with highest weight (1/2,...,sign/2)."""
    mod = dirac_module(n)
    if n % 2:
        return _realize(mod, spinor_weight(n), "spin")
    proj = _half_spin_projector(mod, sign)
    idx = [k for k in range(mod.dim) if proj[k, k] != 0]
    gens = {p: x.submatrix(idx, idx) for p, x in mod.generators.items()}
    label = "half-spin " + ("+" if sign > 0 else "-")
    return _realize(Module(n, gens, GMatrix.identity(len(idx)), label), spinor_weight(n, sign))


# ---------------------------------------------------------------------------
# Tensor products and projection


def tensor_with_natural(module: Module) -> Module:
    """module (x) C^n; ambient index a * n + r."""
    n = module.n
    nat = natural_generators(n)
    eye_v = module.identity()
    eye_n = GMatrix.identity(n)
    gens = {p: module.generators[p].kron(eye_n) + eye_v.kron(nat[p]) for p in pairs(n)}
    return Module(n, gens, module.gram.kron(eye_n), f"{module.label} (x) natural")


def coupling_operator(module: Module, ambient: Module) -> GMatrix:
    """C = c_2(ambient) - c_2(V) - c_2(C^n); acts by 4 w(rho; lambda) on the lambda summand."""
    c_v = module.casimir2_matrix().scalar_value()
    if c_v is None:
        raise ValueError("base module is not isotypic for c_2")
    shift = c_v + 2 * (module.n - 1)
    return ambient.casimir2_matrix() - ambient.identity().scale(shift)


def spectral_projector(op: GMatrix, target, others) -> GMatrix:
    """prod_{mu in others} (op - mu) / (target - mu)."""
    size = op.nrows
    eye = GMatrix.identity(size)
    out = eye
    for mu in others:
        if mu == target:
            raise EigenvalueCollision(f"eigenvalue {mu} repeated")
        out = out @ (op - eye.scale(mu)).scale(1 / (GaussianRational.coerce(target) - mu))
    return out


def restrict(ambient: Module, proj: GMatrix, label: str = "") -> Module:
    """The submodule proj(ambient), with generators in the column basis of proj
    and the induced Gram matrix."""
    cols = proj.column_basis()
    basis = proj.columns(cols)
    bh = basis.H @ ambient.gram
    gram = bh @ basis
    ginv = gram.inverse()
    left = ginv @ bh
    gens = {p: left @ x @ basis for p, x in ambient.generators.items()}
    mod = Module(ambient.n, gens, gram, label)
    mod.cache["basis"] = basis
    mod.cache["coords"] = left
    return mod


def summand_projectors(module: Module, rho: DominantWeight, ambient: Module | None = None) -> dict[DominantWeight, GMatrix]:
    """Projectors of module (x) C^n onto each summand from branching."""
    if ambient is None:
        ambient = tensor_with_natural(module)
    dec = decompose(rho)
    op = coupling_operator(module, ambient)
    four_w = [4 * s.conformal_weight for s in dec.summands]
    distinct = sorted(set(four_w))
    if len(distinct) != len(four_w) - (1 if dec.exceptional else 0):
        raise EigenvalueCollision(f"coincident conformal weights for {rho}")
    out = {}
    for s, fw in zip(dec.summands, four_w):
        out[s.lam] = spectral_projector(op, fw, [x for x in distinct if x != fw])
    if dec.exceptional:
        from .enveloping import pf_elements

        pf_amb, _ = pf_elements(ambient)
        a, b = dec.exceptional_pair
        la, lb = dec.summands[a].lam, dec.summands[b].lam
        pa, pb = pfaffian_eigenvalue(la), pfaffian_eigenvalue(lb)
        joint = out[la]
        out[la] = joint @ spectral_projector(pf_amb, pa, [pb])
        out[lb] = joint @ spectral_projector(pf_amb, pb, [pa])
    return out


# ---------------------------------------------------------------------------
# General irreducibles


def _parent(rho: DominantWeight) -> tuple[DominantWeight, tuple[int, int]] | None:
    """A dominant rho' = rho -+ mu_i with |rho'^i| = |rho^i| - 1, smallest norm,
    ties to the largest i.  Half-integral parents keep |entries| >= 1/2."""
    best = None
    for i in range(rho.m):
        x = rho[i]
        if x == 0 or abs(x) < 1:
            continue
        sign = 1 if x > 0 else -1
        ents = rho.shifted(i, -sign)
        try:
            cand = DominantWeight(ents, rho.n)
        except ValueError:
            continue
        key = (inner(cand.entries, cand.entries), -i)
        if best is None or key < best[0]:
            best = (key, cand, (sign, i))
    return None if best is None else (best[1], best[2])


def _base(rho: DominantWeight) -> RepRealization | None:
    n = rho.n
    if rho == zero(n):
        return trivial_rep(n)
    if rho == fundamental(n, 1):
        return natural_rep(n)
    if rho.half_integral and all(abs(x) == HALF for x in rho.entries):
        return spinor_rep(n, 1 if rho[-1] > 0 else -1)
    return None


def build_rep(rho: DominantWeight, budget: int = DEFAULT_BUDGET) -> RepRealization:
    """V_rho realized inside V_rho' (x) C^n for a smaller rho'."""
    cached = _cache_load(rho)
    if cached is not None:
        return cached
    rep = _build(rho, budget)
    _cache_store(rep)
    return rep


@functools.lru_cache(maxsize=256)
def _build(rho: DominantWeight, budget: int) -> RepRealization:
    base = _base(rho)
    if base is not None:
        return base
    found = _parent(rho)
    if found is None:
        raise AmbientMissing(f"no smaller weight leads to {rho}")
    parent, _ = found
    ambient_dim = rho.n * dim(parent)
    if ambient_dim > budget:
        raise BudgetExceeded(f"ambient dimension {ambient_dim} for {rho} exceeds the budget {budget}")
    prev = _build(parent, budget)
    ambient = tensor_with_natural(prev)
    projs = summand_projectors(prev, parent, ambient)
    if rho not in projs:
        raise AmbientMissing(f"{rho} is not a summand of {parent} (x) C^{rho.n}")
    mod = restrict(ambient, projs[rho], f"{rho} in {parent} (x) natural")
    rep = _realize(mod, rho, f"V{rho}")
    if casimir2(rho) != rep.casimir2_matrix().scalar_value():
        raise AmbientMissing(f"c_2 mismatch for {rho}")
    return rep


def _cache_path(rho: DominantWeight) -> Path | None:
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    name = f"n{rho.n}_" + "_".join(str(x).replace("/", "o").replace("-", "m") for x in rho.entries) + ".json"
    return Path(root) / name


def _cache_load(rho: DominantWeight) -> RepRealization | None:
    path = _cache_path(rho)
    if path is None or not path.exists():
        return None
    from .serialize import rep_from_json

    try:
        return rep_from_json(json.loads(path.read_text()))
    except (ValueError, KeyError):
        return None


def _cache_store(rep: RepRealization) -> None:
    path = _cache_path(rep.rho)
    if path is None:
        return
    from .serialize import rep_to_json

    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(rep_to_json(rep)))


def rep_suite(n: int) -> list[RepRealization]:
    """natural, 2-forms (or their halves), spinors and V_(2,0,...)."""
    suite = [natural_rep(n)]
    if n == 3:
        suite.append(_adjoint_small(n))
    elif n == 4:
        suite.extend(middle_forms(4)[s] for s in (1, -1))
    else:
        suite.append(exterior_rep(n, 2))
    if n % 2:
        suite.append(spinor_rep(n))
    else:
        suite.extend(spinor_rep(n, s) for s in (1, -1))
    two = [Fraction(0)] * (n // 2)
    two[0] = Fraction(2)
    suite.append(build_rep(DominantWeight(tuple(two), n)))
    return suite


def _adjoint_small(n: int) -> RepRealization:
    # n = 3: 2-forms are the adjoint, highest weight (1)
    mod = _exterior_module(n, 2)
    return _realize(mod, fundamental(n, 1), "exterior 2")
