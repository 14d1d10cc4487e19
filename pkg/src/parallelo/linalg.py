"""Exact rational linear algebra on small dense matrices.

Everything here works over ``fractions.Fraction`` or plain Python ints, so
there is no rounding and no overflow.  Row reduction always picks the
leftmost nonzero column and, inside it, the first nonzero row.

`rank_mod_p` is the one exception to exact rational arithmetic. It is only
ever used as a lower bound on the rational rank of an integer matrix.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

import numpy as np

Rational = Fraction

MODULUS = 2_147_483_647  # 2**31 - 1, prime; products stay inside int64


class DimensionError(ValueError):
    """Raised when vector/matrix shapes do not agree."""


def as_rational(x) -> Fraction:
    """Parse ints, Fractions and strings like ``"-3/2"`` (or ``"−3/2"``)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip().replace("−", "-"))
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class RatMatrix:
    rows: tuple[tuple[Fraction, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence], ncols: int | None = None) -> "RatMatrix":
        data = tuple(tuple(as_rational(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(data[0]) if data else 0
        for row in data:
            if len(row) != ncols:
                raise DimensionError(f"row of length {len(row)} in a matrix with {ncols} columns")
        return cls(data, ncols)

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(tuple(zip(*self.rows)) if self.rows else (), self.nrows)

    def __matmul__(self, other: "RatMatrix") -> "RatMatrix":
        if self.ncols != other.nrows:
            raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
        cols = other.transpose().rows
        return RatMatrix(
            tuple(tuple(sum((a * b for a, b in zip(row, col)), Fraction(0)) for col in cols) for row in self.rows),
            other.ncols,
        )

    def stack(self, *vectors: Sequence) -> "RatMatrix":
        return RatMatrix.from_rows(list(self.rows) + [list(v) for v in vectors], self.ncols)


def _to_matrix(m) -> RatMatrix:
    if isinstance(m, RatMatrix):
        return m
    return RatMatrix.from_rows(m)


def _integer_rows(m: RatMatrix) -> list[list[int]]:
    out = []
    for row in m.rows:
        den = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * den) for x in row])
    return out


def _integer_rank(rows: list[list[int]], ncols: int) -> int:
    rows = [list(r) for r in rows if any(r)]
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        p = rows[rank]
        a = p[col]
        for i in range(rank + 1, len(rows)):
            b = rows[i][col]
            if not b:
                continue
            new = [a * x - b * y for x, y in zip(rows[i], p)]
            g = gcd(*new)
            rows[i] = [x // g for x in new] if g > 1 else new
        rank += 1
        if rank == len(rows):
            break
    return rank


def rank(m) -> int:
    """Rank over the rationals."""
    m = _to_matrix(m)
    if m.nrows == 0 or m.ncols == 0:
        return 0
    return _integer_rank(_integer_rows(m), m.ncols)


def integer_rank(rows: Sequence[Sequence[int]], ncols: int) -> int:
    """Rank over Q of an integer matrix given as plain lists."""
    return _integer_rank([list(r) for r in rows], ncols)


def rank_mod_p(rows: Sequence[Sequence[int]], ncols: int, p: int = MODULUS, stop_at: int | None = None) -> int:
    """Rank of an integer matrix over GF(p).

    Never exceeds the rational rank, so ``rank_mod_p(m) == k`` together with
    an a-priori bound ``rank(m) <= k`` certifies ``rank(m) == k``.  With
    ``stop_at`` the elimination ends as soon as that rank is reached.
    """
    if not rows or ncols == 0:
        return 0
    a = np.array(rows, dtype=np.int64) % p
    nrows = a.shape[0]
    r = 0
    for col in range(ncols):
        nz = np.nonzero(a[r:, col])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            a[[r, piv]] = a[[piv, r]]
        inv = pow(int(a[r, col]), p - 2, p)
        a[r] = (a[r] * inv) % p
        below = a[r + 1 :, col].copy()
        if below.any():
            a[r + 1 :] = (a[r + 1 :] - np.outer(below, a[r]) % p) % p
        r += 1
        if r == nrows or r == stop_at:
            break
    return r


def rref(m) -> tuple[RatMatrix, list[int]]:
    """Reduced row echelon form and the pivot columns."""
    m = _to_matrix(m)
    rows = [list(r) for r in m.rows]
    pivots: list[int] = []
    r = 0
    for col in range(m.ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        lead = rows[r][col]
        rows[r] = [x / lead for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return RatMatrix(tuple(tuple(row) for row in rows), m.ncols), pivots


def in_row_space(m, v: Sequence) -> bool:
    """True iff ``v`` is a rational combination of the rows of ``m``."""
    m = _to_matrix(m)
    v = [as_rational(x) for x in v]
    if len(v) != m.ncols:
        raise DimensionError(f"vector of length {len(v)} against {m.ncols} columns")
    if not any(v):
        return True
    return rank(m.stack(v)) == rank(m)


def nullspace(m) -> list[tuple[Fraction, ...]]:
    """Basis of ``{x : m x = 0}``, one vector per free column."""
    m = _to_matrix(m)
    red, pivots = rref(m)
    free = [c for c in range(m.ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * m.ncols
        x[f] = Fraction(1)
        for row, pc in zip(red.rows, pivots):
            x[pc] = -row[f]
        basis.append(tuple(x))
    return basis


def inverse(m) -> RatMatrix:
    m = _to_matrix(m)
    n = m.nrows
    if n != m.ncols:
        raise DimensionError(f"cannot invert a {m.shape} matrix")
    aug = RatMatrix.from_rows([list(row) + [int(i == j) for j in range(n)] for i, row in enumerate(m.rows)])
    red, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise ZeroDivisionError("matrix is singular")
    return RatMatrix(tuple(row[n:] for row in red.rows), n)


def primitive_integer(v: Sequence) -> tuple[int, ...]:
    """Scale a rational vector to a primitive integer vector whose first nonzero entry is positive."""
    v = [as_rational(x) for x in v]
    if not any(v):
        raise ValueError("zero vector has no primitive representative")
    den = lcm(*(x.denominator for x in v))
    ints = [int(x * den) for x in v]
    g = gcd(*ints)
    ints = [x // g for x in ints]
    lead = next(x for x in ints if x)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)
