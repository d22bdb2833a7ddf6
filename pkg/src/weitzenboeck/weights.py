"""Dominant weights of so(n): validation, the half sum of positive roots,
the standard inner product, lexicographic order and the Weyl dimension formula.

Weights are tuples of ``Fraction`` of length m = floor(n/2), all entries in Z or
all in Z + 1/2.
"""
from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

Rational = Fraction
HALF = Fraction(1, 2)


class WeightError(ValueError):
    pass


class MixedParity(WeightError):
    pass


class NotDominant(WeightError):
    pass


class RankMismatch(WeightError):
    pass


class InternalNonInteger(ArithmeticError):
    pass


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point weights are not accepted")
    return Fraction(x)


@dataclass(frozen=True)
class WeightContext:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise WeightError(f"ambient dimension must be an integer >= 3, got {self.n!r}")

    @property
    def m(self) -> int:
        return self.n // 2

    @property
    def even(self) -> bool:
        return self.n % 2 == 0

    @property
    def parity(self) -> str:
        return "even" if self.even else "odd"


def _integrality(entries: Sequence[Fraction]) -> str:
    kinds = set()
    for x in entries:
        if x.denominator == 1:
            kinds.add("int")
        elif x.denominator == 2:
            kinds.add("half")
        else:
            raise MixedParity(f"entry {x} is neither integral nor half-integral")
    if len(kinds) > 1:
        raise MixedParity(f"entries {tuple(str(e) for e in entries)} mix integral and half-integral values")
    return kinds.pop() if kinds else "int"


def dominance_violation(entries: Sequence[Fraction], n: int) -> str | None:
    """Return a description of the first violated inequality, or None."""
    m = n // 2
    for i in range(m - 1):
        lo = abs(entries[i + 1]) if (n % 2 == 0 and i + 1 == m - 1) else entries[i + 1]
        if entries[i] < lo:
            return f"entry {i + 1} = {entries[i]} is smaller than {lo}"
    if n % 2 == 1 and entries[m - 1] < 0:
        return f"last entry {entries[m - 1]} is negative for odd n"
    return None


@functools.total_ordering
@dataclass(frozen=True)
class DominantWeight:
    entries: tuple[Fraction, ...]
    n: int

    def __post_init__(self):
        ctx = WeightContext(self.n)
        ents = tuple(_frac(x) for x in self.entries)
        object.__setattr__(self, "entries", ents)
        if len(ents) != ctx.m:
            raise RankMismatch(f"expected {ctx.m} entries for n={self.n}, got {len(ents)}")
        _integrality(ents)
        bad = dominance_violation(ents, self.n)
        if bad:
            raise NotDominant(f"{format_weight(ents)} is not dominant for n={self.n}: {bad}")

    @property
    def context(self) -> WeightContext:
        return WeightContext(self.n)

    @property
    def m(self) -> int:
        return self.n // 2

    @property
    def half_integral(self) -> bool:
        return bool(self.entries) and self.entries[0].denominator == 2

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __lt__(self, other: "DominantWeight") -> bool:
        return lex_compare(self, other) < 0

    def shifted(self, i: int, sign: int) -> tuple[Fraction, ...]:
        """Entries of rho + sign * mu_i (0-based i); not validated."""
        e = list(self.entries)
        e[i] += sign
        return tuple(e)

    def conjugate(self) -> "DominantWeight":
        """Negate the last entry (the outer automorphism for even n)."""
        e = list(self.entries)
        e[-1] = -e[-1]
        return DominantWeight(tuple(e), self.n)

    def __str__(self) -> str:
        return format_weight(self.entries)


def validate_weight(entries: Iterable, n: int) -> DominantWeight:
    return DominantWeight(tuple(_frac(x) for x in entries), n)


def is_dominant(entries: Sequence, n: int) -> bool:
    try:
        validate_weight(entries, n)
    except WeightError:
        return False
    return True


def parse_weight(text: str, n: int) -> DominantWeight:
    """Parse "1,1/2,..." and pad with zeros up to rank m."""
    m = n // 2
    text = text.strip()
    if text in ("", "0"):
        parts: list[Fraction] = []
    else:
        try:
            parts = [Fraction(tok.strip()) for tok in text.split(",")]
        except (ValueError, ZeroDivisionError) as exc:
            raise WeightError(f"cannot parse weight {text!r}") from exc
    if len(parts) > m:
        raise RankMismatch(f"weight {text!r} has {len(parts)} entries but n={n} has rank {m}")
    parts += [Fraction(0)] * (m - len(parts))
    if parts and parts[0].denominator == 2:
        # padding of a half-integral weight with zeros would mix classes
        _integrality(parts)
    return validate_weight(parts, n)


def format_weight(entries: Sequence[Fraction]) -> str:
    return "(" + ",".join(str(x) for x in entries) + ")"


def zero(n: int) -> DominantWeight:
    return DominantWeight((Fraction(0),) * (n // 2), n)


def fundamental(n: int, p: int) -> DominantWeight:
    """The weight (1_p) = (1,...,1,0,...,0) with p ones."""
    m = n // 2
    if not 0 <= p <= m:
        raise WeightError(f"(1_p) needs 0 <= p <= {m} for n={n}, got p={p}")
    return DominantWeight(tuple(Fraction(1 if i < p else 0) for i in range(m)), n)


def spinor_weight(n: int, sign: int = 1) -> DominantWeight:
    m = n // 2
    e = [HALF] * m
    if n % 2 == 0:
        e[-1] = HALF * sign
    return DominantWeight(tuple(e), n)


def delta(n: int) -> tuple[Fraction, ...]:
    ctx = WeightContext(n)
    shift = Fraction(0) if ctx.even else HALF
    return tuple(Fraction(ctx.m - 1 - i) + shift for i in range(ctx.m))


def inner(a: Sequence, b: Sequence) -> Fraction:
    a = tuple(getattr(a, "entries", a))
    b = tuple(getattr(b, "entries", b))
    if len(a) != len(b):
        raise RankMismatch(f"cannot pair weights of rank {len(a)} and {len(b)}")
    return sum((_frac(x) * _frac(y) for x, y in zip(a, b)), Fraction(0))


def positive_roots(n: int) -> list[tuple[int, ...]]:
    m = n // 2
    roots = []
    for i in range(m):
        for j in range(i + 1, m):
            for s in (-1, 1):
                r = [0] * m
                r[i], r[j] = 1, s
                roots.append(tuple(r))
    if n % 2 == 1:
        for i in range(m):
            r = [0] * m
            r[i] = 1
            roots.append(tuple(r))
    return roots


@functools.lru_cache(maxsize=None)
def _dim(entries: tuple[Fraction, ...], n: int) -> int:
    d = delta(n)
    shifted = tuple(x + y for x, y in zip(entries, d))
    num = Fraction(1)
    for alpha in positive_roots(n):
        num *= inner(shifted, alpha) / inner(d, alpha)
    if num.denominator != 1:
        raise InternalNonInteger(f"Weyl dimension of {format_weight(entries)} came out as {num}")
    return int(num)


def dim(rho: DominantWeight) -> int:
    return _dim(rho.entries, rho.n)


def lex_compare(a: DominantWeight, b: DominantWeight) -> int:
    if len(a.entries) != len(b.entries) or a.n != b.n:
        raise RankMismatch("weights live in different contexts")
    for x, y in zip(a.entries, b.entries):
        if x != y:
            return 1 if x > y else -1
    return 0


def dominant_weights(n: int, max_entry=3) -> Iterator[DominantWeight]:
    """All dominant weights with every |entry| <= max_entry, integral then half-integral,
    each block in lexicographically increasing order."""
    m = n // 2
    max_entry = _frac(max_entry)
    for offset in (Fraction(0), HALF):
        top = int(max_entry - offset)
        values = [offset + k for k in range(top + 1)]
        last = values if n % 2 == 1 else sorted({-v for v in values} | set(values))
        for head in itertools.product(values, repeat=m - 1):
            for tail in last:
                ents = head + (tail,)
                if dominance_violation(ents, n) is None:
                    yield DominantWeight(ents, n)
