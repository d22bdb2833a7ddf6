"""Irreducible decomposition of V_rho (x) C^n.

Each summand has multiplicity one; its highest weight is rho +- mu_i, or rho itself
(odd n with nonzero last entry).  Conformal weights are filled in from their
closed forms; ``casimir.conformal_weight`` recomputes them from Casimir values.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction

from .weights import DominantWeight, dim, is_dominant


class BranchingDiagnostic(RuntimeError):
    """Conformal weights are not ordered the way the decomposition predicts."""


@dataclass(frozen=True)
class Summand:
    lam: DominantWeight
    conformal_weight: Fraction
    translated_weight: Fraction
    dimension: int
    pf_eigenvalue: Fraction | None
    # how lam arises from rho: (+1, i), (-1, i) or (0, None); i is 0-based
    shift: tuple[int, int | None]


@dataclass(frozen=True)
class Decomposition:
    rho: DominantWeight
    summands: tuple[Summand, ...]
    exceptional: bool
    exceptional_pair: tuple[int, int] | None

    @property
    def n(self) -> int:
        return self.rho.n

    def __len__(self) -> int:
        return len(self.summands)

    def weights(self) -> list[DominantWeight]:
        return [s.lam for s in self.summands]

    def index(self, lam: DominantWeight) -> int:
        for k, s in enumerate(self.summands):
            if s.lam == lam:
                return k
        raise KeyError(str(lam))

    def conformal_weights(self) -> list[Fraction]:
        return [s.conformal_weight for s in self.summands]

    def translated_weights(self) -> list[Fraction]:
        return [s.translated_weight for s in self.summands]

    def dimensions(self) -> list[int]:
        return [s.dimension for s in self.summands]


def closed_form_weight(rho: DominantWeight, shift: tuple[int, int | None]) -> Fraction:
    n = rho.n
    sign, i = shift
    if sign == 0:
        return Fraction(-(n - 1), 2)
    k = i + 1  # 1-based position
    if sign > 0:
        return rho[i] + 1 - k
    return -rho[i] - n + k + 1


def is_exceptional(rho: DominantWeight) -> bool:
    m = rho.m
    return rho.n % 2 == 0 and rho[m - 2] > 0 and rho[m - 1] == 0


@functools.lru_cache(maxsize=4096)
def decompose(rho: DominantWeight) -> Decomposition:
    from .casimir import pfaffian_eigenvalue

    n, m = rho.n, rho.m
    found: list[tuple[DominantWeight, tuple[int, int | None]]] = []
    for i in range(m):
        for sign in (1, -1):
            ents = rho.shifted(i, sign)
            if is_dominant(ents, n):
                found.append((DominantWeight(ents, n), (sign, i)))
    if n % 2 == 1 and rho[m - 1] > 0:
        found.append((rho, (0, None)))
    found.sort(key=lambda t: t[0], reverse=True)

    half = Fraction(n - 1, 2)
    summands = []
    for lam, shift in found:
        w = closed_form_weight(rho, shift)
        pf = pfaffian_eigenvalue(lam) if n % 2 == 0 else None
        summands.append(Summand(lam, w, w + half, dim(lam), pf, shift))

    exceptional = is_exceptional(rho)
    pair = None
    if exceptional:
        plus = DominantWeight(rho.shifted(m - 1, 1), n)
        minus = DominantWeight(rho.shifted(m - 1, -1), n)
        idx = {s.lam: k for k, s in enumerate(summands)}
        pair = (idx[plus], idx[minus])

    _check_weight_order(rho, summands, pair)
    return Decomposition(rho, tuple(summands), exceptional, pair)


def _check_weight_order(rho: DominantWeight, summands: list[Summand], pair) -> None:
    """Conformal weights decrease along the lexicographic order.

    Two adjacent departures are expected: the exceptional pair shares its weight,
    and for a negative last entry rho + mu_m precedes rho - mu_m while carrying the
    smaller weight (conjugation swaps the two).  Anything else is reported.
    """
    ws = [s.conformal_weight for s in summands]
    m = rho.m
    for k in range(len(ws) - 1):
        if ws[k] > ws[k + 1]:
            continue
        if pair is not None and (k, k + 1) == pair and ws[k] == ws[k + 1]:
            continue
        if (rho[m - 1] < 0 and summands[k].shift == (1, m - 1) and summands[k + 1].shift == (-1, m - 1)
                and ws[k] < ws[k + 1]):
            continue
        raise BranchingDiagnostic(
            f"conformal weights {[str(w) for w in ws]} of {rho} (n={rho.n}) break the expected order"
        )
    distinct = set(ws)
    if len(distinct) != len(ws) - (1 if pair is not None else 0):
        raise BranchingDiagnostic(f"repeated conformal weights {[str(w) for w in ws]} for {rho} (n={rho.n})")


def summand_count(rho: DominantWeight) -> int:
    return len(decompose(rho).summands)
