"""Images of enveloping-algebra elements: e^q_ij, e_hat^q_ij, c_q, pf and pf_ij."""
from __future__ import annotations

import itertools
from fractions import Fraction
from math import comb, factorial

from ..exact import GaussianRational, GMatrix
from .realization import BudgetExceeded, Module

PF_MAX_N = 8


class OddDimension(ValueError):
    pass


def e_power_table(module: Module, q_max: int) -> list[dict[tuple[int, int], GMatrix]]:
    """table[q][(i, j)] = pi(e^q_ij) for 0 <= q <= q_max, built by
    e^q_ij = sum_k e^{q-1}_ik e_kj."""
    table = module.cache.setdefault("e_power", [])
    n, d = module.n, module.dim
    if not table:
        ident, zero = GMatrix.identity(d), GMatrix.zeros(d)
        table.append({(i, j): (ident if i == j else zero) for i in range(n) for j in range(n)})
    if len(table) == 1 and q_max >= 1:
        table.append({(i, j): module.e(i, j) for i in range(n) for j in range(n)})
    while len(table) <= q_max:
        prev = table[-1]
        nxt = {}
        for i in range(n):
            for j in range(n):
                acc = GMatrix.zeros(d)
                for k in range(n):
                    if k != j:
                        acc = acc + prev[(i, k)] @ module.e(k, j)
                nxt[(i, j)] = acc
        table.append(nxt)
    return table


def e_power(module: Module, i: int, j: int, q: int) -> GMatrix:
    return e_power_table(module, q)[q][(i, j)]


def e_hat_power(module: Module, i: int, j: int, q: int) -> GMatrix:
    key = ("e_hat", q)
    cached = module.cache.setdefault(key, {})
    if (i, j) not in cached:
        s = Fraction(module.n - 1, 2)
        table = e_power_table(module, q)
        acc = GMatrix.zeros(module.dim)
        for p in range(q + 1):
            acc = acc + table[p][(i, j)].scale(comb(q, p) * s ** (q - p))
        cached[(i, j)] = acc
    return cached[(i, j)]


def casimir_trace(module: Module, q: int) -> GaussianRational:
    """(1/dim) trace of sum_i e^q_ii."""
    table = e_power_table(module, q)[q]
    total = GMatrix.zeros(module.dim)
    for i in range(module.n):
        total = total + table[(i, i)]
    return total.trace() / module.dim


def casimir_matrix(module: Module, q: int) -> GMatrix:
    table = e_power_table(module, q)[q]
    total = GMatrix.zeros(module.dim)
    for i in range(module.n):
        total = total + table[(i, i)]
    return total


# ---------------------------------------------------------------------------
# Pfaffian elements


def perfect_matchings(elems: tuple[int, ...]):
    """Yield (sign, pairs) over perfect matchings of a sorted tuple; pairs (a<b) are
    listed by first element and sign is that of the permutation a1 b1 a2 b2 ..."""
    if not elems:
        yield 1, ()
        return
    a = elems[0]
    for k in range(1, len(elems)):
        b = elems[k]
        rest = elems[1:k] + elems[k + 1:]
        # moving b next to a passes over k-1 elements
        s = -1 if (k - 1) % 2 else 1
        for sign, tail in perfect_matchings(rest):
            yield s * sign, ((a, b),) + tail


def _ordered_sum(module: Module, prs: tuple[tuple[int, int], ...]) -> GMatrix:
    """Sum over all orderings of the product of pi(e_ab) for the given pairs."""
    d = module.dim
    total = GMatrix.zeros(d)
    for order in itertools.permutations(prs):
        prod = module.e(*order[0])
        for pr in order[1:]:
            prod = prod @ module.e(*pr)
        total = total + prod
    return total


def _i_power_inverse(m: int) -> GaussianRational:
    # 1 / i^m = (-i)^m
    return [GaussianRational(1), GaussianRational(0, -1), GaussianRational(-1), GaussianRational(0, 1)][m % 4]


def pf_elements(module: Module) -> tuple[GMatrix, dict[tuple[int, int], GMatrix]]:
    """pi(pf) and pi(pf_ij) for all 0-based i, j."""
    n = module.n
    if n % 2:
        raise OddDimension(f"the Pfaffian element needs even n, got n={n}")
    if n > PF_MAX_N:
        raise BudgetExceeded(f"Pfaffian sums are capped at n = {PF_MAX_N}")
    if "pf" in module.cache:
        return module.cache["pf"]
    m = n // 2
    d = module.dim
    pf = GMatrix.zeros(d)
    for sign, prs in perfect_matchings(tuple(range(n))):
        pf = pf + _ordered_sum(module, prs).scale(sign)
    pf = pf.scale(_i_power_inverse(m) * Fraction(1, factorial(m)))

    table: dict[tuple[int, int], GMatrix] = {}
    pref = _i_power_inverse(m) * Fraction(1, factorial(m - 1))
    for i in range(n):
        table[(i, i)] = pf
        for j in range(i + 1, n):
            rest = tuple(k for k in range(n) if k not in (i, j))
            acc = GMatrix.zeros(d)
            for sign, prs in perfect_matchings(rest):
                if prs:
                    acc = acc + _ordered_sum(module, prs).scale(sign)
                else:
                    acc = acc + GMatrix.identity(d).scale(sign)
            table[(i, j)] = acc.scale(pref * (-1) ** (i + j))
    for i in range(n):
        for j in range(i):
            table[(i, j)] = -table[(j, i)]
    module.cache["pf"] = (pf, table)
    return pf, table
