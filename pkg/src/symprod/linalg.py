"""Exact linear algebra over the rationals and over prime fields.

Scalars over the rationals are :class:`fractions.Fraction`; over ``GF(p)`` they
are plain ``int`` residues in ``[0, p)``.  Matrices are immutable tuples of
rows.  Nothing here touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .errors import SymprodError

__all__ = [
    "Fraction",
    "QQ",
    "Rationals",
    "PrimeField",
    "Matrix",
    "is_prime",
    "parse_rational",
    "format_rational",
    "rref",
    "rank",
    "kernel_basis",
    "solve_linear",
    "det",
]

PRIME_LIMIT = 2**31


def is_prime(p: int) -> bool:
    """Deterministic Miller-Rabin, exact for every ``p < 3.2e9``."""
    if p < 2:
        return False
    for q in (2, 3, 5, 7):
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


class Rationals:
    """The field of rational numbers."""

    zero = Fraction(0)
    one = Fraction(1)

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")

    def __call__(self, x) -> Fraction:
        if isinstance(x, str):
            return parse_rational(x)
        return Fraction(x)

    def inv(self, x: Fraction) -> Fraction:
        return 1 / x

    def reduce(self, x):
        return x


QQ = Rationals()


class PrimeField:
    """The prime field ``GF(p)`` with ``p < 2**31``."""

    def __init__(self, p: int):
        p = int(p)
        if p >= PRIME_LIMIT or not is_prime(p):
            raise SymprodError(f"{p} is not a prime below 2^31")
        self.p = p
        self.zero = 0
        self.one = 1

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))

    def __call__(self, x) -> int:
        if isinstance(x, str):
            x = parse_rational(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise SymprodError(f"denominator of {x} vanishes mod {self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def inv(self, x: int) -> int:
        return pow(x, -1, self.p)

    def reduce(self, x: int) -> int:
        return x % self.p


def parse_rational(s) -> Fraction:
    """Parse ``"p/q"`` or ``"n"``; floats are refused."""
    if isinstance(s, bool):
        raise SymprodError("booleans are not rationals")
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    if not isinstance(s, str):
        raise SymprodError(f"cannot read {s!r} as an exact rational")
    text = s.strip()
    num, sep, den = text.partition("/")
    try:
        if sep:
            return Fraction(int(num), int(den))
        return Fraction(int(num))
    except (ValueError, ZeroDivisionError) as exc:
        raise SymprodError(f"bad rational literal {s!r}") from exc


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class Matrix:
    """Row-major matrix over ``field``; ``ncols`` is kept for empty matrices."""

    rows: tuple
    ncols: int
    field: object = QQ

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], field=QQ, ncols: Optional[int] = None) -> "Matrix":
        conv = tuple(tuple(field(x) for x in row) for row in rows)
        if ncols is None:
            if not conv:
                raise SymprodError("ncols is required for an empty matrix")
            ncols = len(conv[0])
        if any(len(r) != ncols for r in conv):
            raise SymprodError("ragged matrix rows")
        return cls(conv, ncols, field)

    @classmethod
    def identity(cls, n: int, field=QQ) -> "Matrix":
        return cls.from_rows([[1 if i == j else 0 for j in range(n)] for i in range(n)], field)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def transpose(self) -> "Matrix":
        cols = tuple(tuple(r[c] for r in self.rows) for c in range(self.ncols))
        return Matrix(cols, self.nrows, self.field)

    def stack(self, other: "Matrix") -> "Matrix":
        if other.ncols != self.ncols or other.field != self.field:
            raise SymprodError("cannot stack matrices of different width or field")
        return Matrix(self.rows + other.rows, self.ncols, self.field)

    def apply(self, vec: Sequence) -> tuple:
        red = self.field.reduce
        return tuple(red(sum(a * b for a, b in zip(row, vec))) for row in self.rows)

    def __matmul__(self, other: "Matrix") -> "Matrix":
        cols = other.transpose().rows
        red = self.field.reduce
        out = tuple(tuple(red(sum(a * b for a, b in zip(r, c))) for c in cols) for r in self.rows)
        return Matrix(out, other.ncols, self.field)

    def __str__(self):
        return "\n".join("[" + ", ".join(format_rational(x) for x in r) + "]" for r in self.rows)


def _eliminate(rows: list, ncols: int, field):
    """In-place Gauss-Jordan; returns pivot columns."""
    red = field.reduce
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        rows[r] = [red(x * inv) for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [red(x - f * y) for x, y in zip(rows[i], prow)]
        pivots.append(c)
        r += 1
    return pivots


def rref(m: Matrix):
    """Reduced row-echelon form.

    Returns ``(reduced, rank, pivot_cols)``; ``reduced`` keeps the zero rows so
    it has the same shape as ``m``.
    """
    rows = [list(r) for r in m.rows]
    pivots = _eliminate(rows, m.ncols, m.field)
    return Matrix(tuple(tuple(r) for r in rows), m.ncols, m.field), len(pivots), tuple(pivots)


def rank(m: Matrix) -> int:
    return rref(m)[1]


def kernel_basis(m: Matrix) -> Matrix:
    """Basis of the right null space, one vector per row (free-variable order)."""
    reduced, rk, pivots = rref(m)
    field = m.field
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [field.zero] * m.ncols
        v[f] = field.one
        for i, pc in enumerate(pivots):
            v[pc] = field.reduce(-reduced.rows[i][f])
        basis.append(tuple(v))
    return Matrix(tuple(basis), m.ncols, field)


def solve_linear(m: Matrix, rhs: Sequence) -> Optional[tuple]:
    """One particular solution of ``m x = rhs``, or ``None`` if inconsistent."""
    if len(rhs) != m.nrows:
        raise SymprodError("rhs length must equal the number of rows")
    field = m.field
    aug = [list(row) + [field(b)] for row, b in zip(m.rows, rhs)]
    pivots = _eliminate(aug, m.ncols + 1, field)
    if pivots and pivots[-1] == m.ncols:
        return None
    x = [field.zero] * m.ncols
    for i, pc in enumerate(pivots):
        x[pc] = aug[i][m.ncols]
    return tuple(x)


def det(m: Matrix):
    if m.nrows != m.ncols:
        raise SymprodError("determinant of a non-square matrix")
    field = m.field
    red = field.reduce
    rows = [list(r) for r in m.rows]
    n = len(rows)
    sign = 1
    acc = field.one
    for c in range(n):
        piv = next((i for i in range(c, n) if rows[i][c] != 0), None)
        if piv is None:
            return field.zero
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        p = rows[c][c]
        acc = red(acc * p)
        inv = field.inv(p)
        for i in range(c + 1, n):
            if rows[i][c] != 0:
                f = red(rows[i][c] * inv)
                rows[i] = [red(x - f * y) for x, y in zip(rows[i], rows[c])]
    return red(sign * acc)
