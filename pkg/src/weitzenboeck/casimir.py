"""Eigenvalues of the Casimir elements c_q, the translated elements c_hat_q and the
Pfaffian element on irreducible so(n)-modules.

c_q is evaluated through the branching sum (1/d(rho)) sum_lambda w^q d(lambda);
the matrix oracle supplies the independent trace route.
"""
from __future__ import annotations

import functools
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .branching import decompose
from .weights import DominantWeight, delta, dim, inner


class OddDimension(ValueError):
    pass


class NotASummand(ValueError):
    pass


def casimir2(rho: DominantWeight) -> Fraction:
    return 2 * inner(rho, rho) + 4 * inner(rho, delta(rho.n))


def pfaffian_eigenvalue(rho: DominantWeight) -> Fraction:
    if rho.n % 2:
        raise OddDimension(f"the Pfaffian element needs even n, got n={rho.n}")
    m = rho.m
    val = Fraction(1)
    for i, x in enumerate(rho.entries):
        val *= x + (m - 1 - i)
    return val


def conformal_weight(rho: DominantWeight, lam: DominantWeight) -> Fraction:
    """Half the difference of <delta+.,delta+.> shifted by -(n-1)/2."""
    if lam not in decompose(rho).weights():
        raise NotASummand(f"{lam} does not occur in {rho} (x) C^{rho.n}")
    d = delta(rho.n)
    a = tuple(x + y for x, y in zip(lam.entries, d))
    b = tuple(x + y for x, y in zip(rho.entries, d))
    return (inner(a, a) - inner(b, b) - rho.n + 1) / 2


@functools.lru_cache(maxsize=None)
def _power_sums(rho: DominantWeight, q: int, translated: bool) -> Fraction:
    dec = decompose(rho)
    total = Fraction(0)
    for s in dec.summands:
        w = s.translated_weight if translated else s.conformal_weight
        total += w**q * s.dimension
    return total / dim(rho)


def casimir_q(rho: DominantWeight, q: int) -> Fraction:
    if q < 0:
        raise ValueError("q must be non-negative")
    return _power_sums(rho, q, False)


def casimir_hat_q(rho: DominantWeight, q: int) -> Fraction:
    if q < 0:
        raise ValueError("q must be non-negative")
    return _power_sums(rho, q, True)


def translate(c: dict[int, Fraction], n: int, q: int) -> Fraction:
    """c_hat_q from c_0..c_q by the binomial shift by (n-1)/2."""
    s = Fraction(n - 1, 2)
    return sum((comb(q, p) * s ** (q - p) * c[p] for p in range(q + 1)), Fraction(0))


@dataclass(frozen=True)
class CasimirTable:
    rho: DominantWeight
    c: dict[int, Fraction] = field(hash=False)
    c_hat: dict[int, Fraction] = field(hash=False)
    pf: Fraction | None = None

    @property
    def q_max(self) -> int:
        return max(self.c)


def casimir_table(rho: DominantWeight, q_max: int = 8) -> CasimirTable:
    c = {q: casimir_q(rho, q) for q in range(q_max + 1)}
    c_hat = {q: casimir_hat_q(rho, q) for q in range(q_max + 1)}
    pf = pfaffian_eigenvalue(rho) if rho.n % 2 == 0 else None
    return CasimirTable(rho, c, c_hat, pf)


def verify_c_identity(rho: DominantWeight, q: int) -> bool:
    """2 c_hat_{2q+1} = -c_hat_{2q} + sum_p (-1)^p c_hat_{2q-p} c_hat_p."""
    ch = lambda k: casimir_hat_q(rho, k)  # noqa: E731
    rhs = -ch(2 * q) + sum(((-1) ** p * ch(2 * q - p) * ch(p) for p in range(2 * q + 1)), Fraction(0))
    return 2 * ch(2 * q + 1) == rhs


def verify_pf_relations(rho: DominantWeight) -> bool:
    if rho.n % 2:
        raise OddDimension(f"the Pfaffian element needs even n, got n={rho.n}")
    m = rho.m
    dec = decompose(rho)
    pf_rho = pfaffian_eigenvalue(rho)
    d = dim(rho)
    trace_sum = sum((s.pf_eigenvalue * s.dimension for s in dec.summands), Fraction(0))
    weighted = sum((s.pf_eigenvalue * s.conformal_weight * s.dimension for s in dec.summands), Fraction(0))
    if trace_sum != 2 * m * pf_rho * d or weighted != 2 * m * pf_rho * d:
        return False
    return all(
        (s.conformal_weight + m - 1) * s.pf_eigenvalue == (s.conformal_weight + m) * pf_rho
        for s in dec.summands
    )


@dataclass(frozen=True)
class RecursionCoefficients:
    rho: DominantWeight
    table: dict[tuple[int, int], Fraction] = field(hash=False)

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        return self.table[key]


def _closed_form(rho: DominantWeight, q: int, p: int) -> Fraction:
    """a_hat_{q,p} from its solved form; q >= 1."""
    ch = lambda k: casimir_hat_q(rho, k)  # noqa: E731
    r = q - 1
    if p == q:
        return Fraction((-1) ** q)
    if p == r:
        return (-1) ** r * ch(0) - Fraction(1 - (-1) ** q, 2)
    return (-1) ** p * ch(r - p)


def recursion_coefficients(rho: DominantWeight, q_max: int = 8) -> RecursionCoefficients:
    """Run the recursion for a_hat_{q,p} and check it against the closed form.

    e_hat^q_ij = sum_p a_hat_{q,p} e_hat^p_ji, evaluated on V_rho.
    """
    n = rho.n
    a: dict[tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    if q_max >= 1:
        a[(1, 0)] = Fraction(n - 1)
        a[(1, 1)] = Fraction(-1)
    for q in range(1, q_max):
        a[(q + 1, q + 1)] = -a[(q, q)]
        a[(q + 1, q)] = -a[(q, q - 1)] - 1
        for p in range(1, q):
            a[(q + 1, p)] = -a[(q, p - 1)]
        a[(q + 1, 0)] = casimir_hat_q(rho, q)
    for (q, p), v in a.items():
        if q >= 1 and v != _closed_form(rho, q, p):
            raise ArithmeticError(f"recursion and closed form disagree at ({q},{p}) for {rho}")
    return RecursionCoefficients(rho, a)
