"""Exact matrices over the Gaussian rationals Q(i).

A ``GMatrix`` is a pair of FLINT rational matrices (real part, imaginary part);
the imaginary part is dropped whenever it vanishes so real computations run at
plain ``fmpq_mat`` speed.  Rank and inversion of complex matrices go through the
real 2x2 block embedding a + ib -> [[a, -b], [b, a]].
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from flint import fmpq, fmpq_mat


def to_fmpq(x) -> fmpq:
    if isinstance(x, fmpq):
        return x
    if isinstance(x, Fraction):
        return fmpq(x.numerator, x.denominator)
    if isinstance(x, int):
        return fmpq(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


def to_fraction(x: fmpq) -> Fraction:
    return Fraction(int(x.p), int(x.q))


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def coerce(cls, x) -> "GaussianRational":
        if isinstance(x, GaussianRational):
            return x
        if isinstance(x, fmpq):
            return cls(to_fraction(x))
        if isinstance(x, complex):
            raise TypeError("floating point complex numbers are not exact")
        return cls(Fraction(x))

    def __add__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        return self + (-GaussianRational.coerce(other))

    def __rsub__(self, other):
        return GaussianRational.coerce(other) - self

    def __mul__(self, other):
        o = GaussianRational.coerce(other)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __truediv__(self, other):
        o = GaussianRational.coerce(other)
        d = o.norm()
        if d == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussianRational(o.re / d, -o.im / d)

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) / self

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def is_real(self) -> bool:
        return self.im == 0

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        im = f"{abs(self.im)}*i"
        if self.re == 0:
            return ("-" if self.im < 0 else "") + im
        return f"{self.re}{'-' if self.im < 0 else '+'}{im}"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        text = text.strip().replace(" ", "")
        if text.endswith("i"):
            # split at the last sign that is not the leading one
            body = text[:-1].rstrip("*")
            cut = max(body.rfind("+"), body.rfind("-"))
            if cut <= 0:
                re_part, im_part = "0", body or "1"
                if im_part in ("+", "-"):
                    im_part += "1"
            else:
                re_part, im_part = body[:cut], body[cut:]
                if im_part in ("+", "-"):
                    im_part += "1"
            return cls(Fraction(re_part), Fraction(im_part))
        return cls(Fraction(text))


I = GaussianRational(0, 1)


def _zero(r: int, c: int) -> fmpq_mat:
    return fmpq_mat(r, c)


def _is_zero(m: fmpq_mat) -> bool:
    return all(x == 0 for x in m.entries())


class GMatrix:
    """Matrix over Q(i) with exact FLINT-backed arithmetic."""

    __slots__ = ("re", "im")

    def __init__(self, re: fmpq_mat, im: fmpq_mat | None = None):
        self.re = re
        if im is not None and _is_zero(im):
            im = None
        self.im = im

    # -- construction ------------------------------------------------------
    @classmethod
    def zeros(cls, r: int, c: int | None = None) -> "GMatrix":
        return cls(_zero(r, r if c is None else c))

    @classmethod
    def identity(cls, n: int) -> "GMatrix":
        m = _zero(n, n)
        for i in range(n):
            m[i, i] = 1
        return cls(m)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "GMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        re_ = _zero(r, c)
        im_ = _zero(r, c)
        for i, row in enumerate(rows):
            if len(row) != c:
                raise ValueError("ragged rows")
            for j, x in enumerate(row):
                g = GaussianRational.coerce(x)
                if g.re:
                    re_[i, j] = to_fmpq(g.re)
                if g.im:
                    im_[i, j] = to_fmpq(g.im)
        return cls(re_, im_)

    @classmethod
    def from_entries(cls, r: int, c: int, entries: dict[tuple[int, int], object]) -> "GMatrix":
        re_ = _zero(r, c)
        im_ = _zero(r, c)
        for (i, j), x in entries.items():
            g = GaussianRational.coerce(x)
            if g.re:
                re_[i, j] = to_fmpq(g.re)
            if g.im:
                im_[i, j] = to_fmpq(g.im)
        return cls(re_, im_)

    # -- shape and access --------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return self.re.nrows(), self.re.ncols()

    @property
    def nrows(self) -> int:
        return self.re.nrows()

    @property
    def ncols(self) -> int:
        return self.re.ncols()

    def is_real(self) -> bool:
        return self.im is None

    def _im(self) -> fmpq_mat:
        return self.im if self.im is not None else _zero(*self.shape)

    def __getitem__(self, key: tuple[int, int]) -> GaussianRational:
        i, j = key
        im = self.im[i, j] if self.im is not None else 0
        return GaussianRational(to_fraction(self.re[i, j]), to_fraction(fmpq(im)))

    def rows(self) -> list[list[GaussianRational]]:
        return [[self[i, j] for j in range(self.ncols)] for i in range(self.nrows)]

    # -- arithmetic --------------------------------------------------------
    def __add__(self, other: "GMatrix") -> "GMatrix":
        if self.im is None and other.im is None:
            return GMatrix(self.re + other.re)
        return GMatrix(self.re + other.re, self._im() + other._im())

    def __sub__(self, other: "GMatrix") -> "GMatrix":
        if self.im is None and other.im is None:
            return GMatrix(self.re - other.re)
        return GMatrix(self.re - other.re, self._im() - other._im())

    def __neg__(self) -> "GMatrix":
        return GMatrix(-self.re, None if self.im is None else -self.im)

    def __matmul__(self, other: "GMatrix") -> "GMatrix":
        a, b, c, d = self.re, self.im, other.re, other.im
        if b is None and d is None:
            return GMatrix(a * c)
        if b is None:
            return GMatrix(a * c, a * d)
        if d is None:
            return GMatrix(a * c, b * c)
        return GMatrix(a * c - b * d, a * d + b * c)

    def scale(self, s) -> "GMatrix":
        g = GaussianRational.coerce(s)
        x, y = to_fmpq(g.re), to_fmpq(g.im)
        if y == 0:
            return GMatrix(self.re * x, None if self.im is None else self.im * x)
        if self.im is None:
            return GMatrix(self.re * x, self.re * y)
        return GMatrix(self.re * x - self.im * y, self.re * y + self.im * x)

    def __mul__(self, s) -> "GMatrix":
        if isinstance(s, GMatrix):
            return self @ s
        return self.scale(s)

    __rmul__ = scale

    def __eq__(self, other) -> bool:
        if not isinstance(other, GMatrix):
            return NotImplemented
        if self.shape != other.shape or self.re != other.re:
            return False
        if self.im is None or other.im is None:
            return self.im is None and other.im is None
        return self.im == other.im

    __hash__ = None  # mutable backing store

    def is_zero(self) -> bool:
        return _is_zero(self.re) and self.im is None

    @property
    def T(self) -> "GMatrix":
        return GMatrix(self.re.transpose(), None if self.im is None else self.im.transpose())

    @property
    def H(self) -> "GMatrix":
        """Conjugate transpose."""
        return GMatrix(self.re.transpose(), None if self.im is None else -self.im.transpose())

    def conjugate(self) -> "GMatrix":
        return GMatrix(self.re, None if self.im is None else -self.im)

    def trace(self) -> GaussianRational:
        n = min(self.shape)
        re_ = sum((self.re[i, i] for i in range(n)), fmpq(0))
        im_ = sum((self.im[i, i] for i in range(n)), fmpq(0)) if self.im is not None else fmpq(0)
        return GaussianRational(to_fraction(re_), to_fraction(im_))

    def scalar_value(self) -> GaussianRational | None:
        """c if the matrix equals c times the identity, else None."""
        r, c = self.shape
        if r != c:
            return None
        if r == 0:
            return GaussianRational(0)
        s = self[0, 0]
        return s if self == GMatrix.identity(r).scale(s) else None

    # -- structure ---------------------------------------------------------
    def kron(self, other: "GMatrix") -> "GMatrix":
        return GMatrix(_kron(self.re, other.re),
                       None if (self.im is None and other.im is None) else
                       _kron(self.re, other._im()) + _kron(self._im(), other.re))

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "GMatrix":
        return GMatrix(_select(self.re, rows, cols), None if self.im is None else _select(self.im, rows, cols))

    def columns(self, cols: Sequence[int]) -> "GMatrix":
        return self.submatrix(range(self.nrows), cols)

    def embed(self) -> fmpq_mat:
        """Real 2r x 2c block form [[A, -B], [B, A]]."""
        r, c = self.shape
        a, b = self.re, self._im()
        out = _zero(2 * r, 2 * c)
        for i in range(r):
            for j in range(c):
                x, y = a[i, j], b[i, j]
                if x:
                    out[i, j] = x
                    out[r + i, c + j] = x
                if y:
                    out[i, c + j] = -y
                    out[r + i, j] = y
        return out

    def rank(self) -> int:
        if self.im is None:
            return self.re.rank()
        return self.embed().rank() // 2

    def inverse(self) -> "GMatrix":
        if self.im is None:
            return GMatrix(self.re.inv())
        r = self.nrows
        big = self.embed().inv()
        return GMatrix(_select(big, range(r), range(r)), _select(big, range(r, 2 * r), range(r)))

    def column_basis(self) -> list[int]:
        """Indices of columns forming a basis of the column space (greedy, left to right)."""
        if self.im is None:
            red, rk = self.re.rref()
            pivots = []
            for i in range(rk):
                for j in range(self.ncols):
                    if red[i, j] != 0:
                        pivots.append(j)
                        break
            return pivots
        target = self.rank()
        chosen: list[int] = []
        for j in range(self.ncols):
            trial = chosen + [j]
            if self.columns(trial).rank() == len(trial):
                chosen = trial
                if len(chosen) == target:
                    break
        return chosen

    # -- serialization -----------------------------------------------------
    def to_strings(self) -> list[list[str]]:
        return [[str(x) for x in row] for row in self.rows()]

    @classmethod
    def from_strings(cls, rows: Sequence[Sequence[str]]) -> "GMatrix":
        return cls.from_rows([[GaussianRational.parse(x) for x in row] for row in rows])

    def __repr__(self) -> str:
        return f"GMatrix({self.to_strings()})"


def _kron(a: fmpq_mat, b: fmpq_mat) -> fmpq_mat:
    ar, ac, br, bc = a.nrows(), a.ncols(), b.nrows(), b.ncols()
    out = _zero(ar * br, ac * bc)
    bent = [(k, l, b[k, l]) for k in range(br) for l in range(bc) if b[k, l] != 0]
    for i in range(ar):
        for j in range(ac):
            x = a[i, j]
            if x == 0:
                continue
            for k, l, y in bent:
                out[i * br + k, j * bc + l] = x * y
    return out


def _select(m: fmpq_mat, rows: Iterable[int], cols: Iterable[int]) -> fmpq_mat:
    rows, cols = list(rows), list(cols)
    out = _zero(len(rows), len(cols))
    for a, i in enumerate(rows):
        for b, j in enumerate(cols):
            x = m[i, j]
            if x != 0:
                out[a, b] = x
    return out


def linear_combinations(mats: Sequence[GMatrix], coeffs: Sequence[Sequence]) -> list[GMatrix]:
    """For each coefficient row c, return sum_k c[k] * mats[k] (one FLINT product for all rows).

    Coefficients must be rational.
    """
    if not mats:
        return []
    r, c = mats[0].shape
    size = r * c
    k = len(mats)
    stack_re = fmpq_mat(size, k)
    stack_im = fmpq_mat(size, k)
    any_im = False
    for col, m in enumerate(mats):
        for idx, x in enumerate(m.re.entries()):
            if x != 0:
                stack_re[idx, col] = x
        if m.im is not None:
            any_im = True
            for idx, x in enumerate(m.im.entries()):
                if x != 0:
                    stack_im[idx, col] = x
    cm = fmpq_mat(k, len(coeffs))
    for j, row in enumerate(coeffs):
        for i, x in enumerate(row):
            if x:
                cm[i, j] = to_fmpq(x)
    out_re = stack_re * cm
    out_im = stack_im * cm if any_im else None
    result = []
    for j in range(len(coeffs)):
        re_ = fmpq_mat(r, c, [out_re[idx, j] for idx in range(size)])
        im_ = fmpq_mat(r, c, [out_im[idx, j] for idx in range(size)]) if out_im is not None else None
        result.append(GMatrix(re_, im_))
    return result


def commutator(a: GMatrix, b: GMatrix) -> GMatrix:
    return a @ b - b @ a
