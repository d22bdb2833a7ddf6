"""Clifford homomorphisms p_lambda(e_i): V_rho -> V_lambda cut out of V_rho (x) C^n."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from ..branching import Decomposition, decompose
from ..exact import GMatrix
from ..weights import DominantWeight
from .realization import Module, RepInvariantError, RepRealization
from .reps import restrict, summand_projectors, tensor_with_natural


@dataclass(eq=False)
class CliffordBlock:
    lam: DominantWeight
    conformal_weight: Fraction
    maps: list[GMatrix]
    adjoints: list[GMatrix]
    target: Module
    projector: GMatrix = field(repr=False)

    def p(self, xi) -> GMatrix:
        """p(xi) for a coefficient vector xi."""
        out = GMatrix.zeros(*self.maps[0].shape)
        for c, mat in zip(xi, self.maps):
            if c:
                out = out + mat.scale(c)
        return out

    def p_star(self, xi) -> GMatrix:
        out = GMatrix.zeros(*self.adjoints[0].shape)
        for c, mat in zip(xi, self.adjoints):
            if c:
                out = out + mat.scale(Fraction(c))
        return out

    def pair(self, i: int, j: int) -> GMatrix:
        """p(e_i)^* p(e_j)."""
        return self.adjoints[i] @ self.maps[j]


@dataclass(eq=False)
class CliffordData:
    rep: RepRealization
    ambient: Module
    decomposition: Decomposition
    blocks: dict[DominantWeight, CliffordBlock]

    def __iter__(self):
        return iter(self.blocks.values())


def _injection(d: int, n: int, j: int) -> GMatrix:
    """phi -> phi (x) e_j, ambient index a * n + r."""
    return GMatrix.from_entries(d * n, d, {(a * n + j, a): 1 for a in range(d)})


def clifford_blocks(rep: RepRealization) -> CliffordData:
    if "clifford" in rep.cache:
        return rep.cache["clifford"]
    n, d = rep.n, rep.dim
    dec = decompose(rep.rho)
    ambient = tensor_with_natural(rep)
    projs = summand_projectors(rep, rep.rho, ambient)
    gram_inv = rep.gram_inverse()
    inj = [_injection(d, n, j) for j in range(n)]
    blocks = {}
    for s in dec.summands:
        proj = projs[s.lam]
        target = restrict(ambient, proj, str(s.lam))
        if target.dim != s.dimension:
            raise RepInvariantError(f"projector for {s.lam} has rank {target.dim}, expected {s.dimension}")
        coords = target.cache["coords"]
        maps = [coords @ inj[j] for j in range(n)]
        adjoints = [gram_inv @ mp.H @ target.gram for mp in maps]
        blocks[s.lam] = CliffordBlock(s.lam, s.conformal_weight, maps, adjoints, target, proj)
    data = CliffordData(rep, ambient, dec, blocks)
    rep.cache["clifford"] = data
    return data
