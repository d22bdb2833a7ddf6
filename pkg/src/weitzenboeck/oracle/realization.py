"""Explicit matrix modules for so(n) over Q(i).

Generators pi(e_ij), i < j, are stored 0-based.  Every module carries a Hermitian
Gram matrix H for which the generators are skew-adjoint: X^* H + H X = 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator

from ..casimir import casimir2
from ..exact import GMatrix, commutator
from ..weights import DominantWeight, WeightContext, dim


class RepInvariantError(ValueError):
    pass


class BudgetExceeded(RuntimeError):
    pass


class AmbientMissing(RuntimeError):
    pass


class ReducibleRequest(ValueError):
    pass


class EigenvalueCollision(ArithmeticError):
    pass


def pairs(n: int) -> Iterator[tuple[int, int]]:
    for i in range(n):
        for j in range(i + 1, n):
            yield i, j


@dataclass(eq=False)
class Module:
    """A (possibly reducible) so(n)-module given by matrices."""

    n: int
    generators: dict[tuple[int, int], GMatrix]
    gram: GMatrix
    label: str = ""
    cache: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return self.gram.nrows

    @property
    def context(self) -> WeightContext:
        return WeightContext(self.n)

    def e(self, i: int, j: int) -> GMatrix:
        """pi(e_ij) for any 0-based i, j (e_ji = -e_ij, e_ii = 0)."""
        if i == j:
            return GMatrix.zeros(self.dim)
        if i < j:
            return self.generators[(i, j)]
        key = ("neg", j, i)
        if key not in self.cache:
            self.cache[key] = -self.generators[(j, i)]
        return self.cache[key]

    def identity(self) -> GMatrix:
        return GMatrix.identity(self.dim)

    def gram_inverse(self) -> GMatrix:
        if "gram_inv" not in self.cache:
            self.cache["gram_inv"] = self.gram.inverse()
        return self.cache["gram_inv"]

    def adjoint(self, a: GMatrix) -> GMatrix:
        """Adjoint with respect to the Gram matrix: H^{-1} A^* H."""
        if self.gram == GMatrix.identity(self.dim):
            return a.H
        return self.gram_inverse() @ a.H @ self.gram

    def is_self_adjoint(self, a: GMatrix) -> bool:
        return a.H @ self.gram == self.gram @ a

    def casimir2_matrix(self) -> GMatrix:
        total = GMatrix.zeros(self.dim)
        for (i, j), x in self.generators.items():
            total = total - x @ x
        return total.scale(2)

    def check_commutators(self) -> bool:
        n = self.n
        for (k, l) in pairs(n):
            for (i, j) in pairs(n):
                lhs = commutator(self.e(k, l), self.e(i, j))
                rhs = GMatrix.zeros(self.dim)
                if k == i:
                    rhs = rhs + self.e(l, j)
                if k == j:
                    rhs = rhs + self.e(i, l)
                if i == l:
                    rhs = rhs - self.e(k, j)
                if l == j:
                    rhs = rhs - self.e(i, k)
                if lhs != rhs:
                    return False
        return True

    def check_skew(self) -> bool:
        return all(x.H @ self.gram + self.gram @ x == GMatrix.zeros(self.dim) for x in self.generators.values())

    def check_gram(self) -> bool:
        return self.gram == self.gram.H


@dataclass(eq=False)
class RepRealization(Module):
    """An irreducible module with a known highest weight."""

    rho: DominantWeight | None = None

    def validate(self) -> "RepRealization":
        if self.rho is None or self.rho.n != self.n:
            raise RepInvariantError("highest weight missing or for the wrong n")
        if self.dim != dim(self.rho):
            raise RepInvariantError(f"dimension {self.dim} differs from the Weyl dimension {dim(self.rho)} of {self.rho}")
        if not self.check_gram():
            raise RepInvariantError("Gram matrix is not Hermitian")
        if not self.check_skew():
            raise RepInvariantError("generators are not skew-adjoint for the Gram matrix")
        if not self.check_commutators():
            raise RepInvariantError("commutation relations fail")
        c2 = self.casimir2_matrix().scalar_value()
        if c2 is None or c2 != casimir2(self.rho):
            raise RepInvariantError(f"c_2 acts by {c2}, expected {casimir2(self.rho)}")
        return self


def casimir2_scalar(module: Module) -> Fraction | None:
    v = module.casimir2_matrix().scalar_value()
    return None if v is None or v.im else v.re
