"""Dense exact matrices with rank, kernel and solve."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from ._backend import rref_int, rref_mod_p
from .field import QQ, Field


@dataclass(frozen=True)
class ExactMatrix:
    nrows: int
    ncols: int
    entries: tuple  # tuple of row tuples holding raw field values
    field: Field = QQ

    def __post_init__(self):
        if len(self.entries) != self.nrows or any(len(r) != self.ncols for r in self.entries):
            raise ValueError("entry grid does not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: Field = QQ, ncols: int | None = None):
        conv = tuple(tuple(field.convert(x) for x in row) for row in rows)
        if ncols is None:
            ncols = len(conv[0]) if conv else 0
        return cls(len(conv), ncols, conv, field)

    @classmethod
    def identity(cls, n: int, field: Field = QQ):
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], field)

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def columns(self, idx: Sequence[int]) -> "ExactMatrix":
        return ExactMatrix(
            self.nrows, len(idx), tuple(tuple(r[j] for j in idx) for r in self.entries), self.field
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(self.ncols, self.nrows, tuple(zip(*self.entries)) if self.nrows else
                           tuple(() for _ in range(self.ncols)), self.field)

    def __matmul__(self, other):
        f = self.field
        if isinstance(other, ExactMatrix):
            if other.field != f:
                raise ValueError("field mismatch")
            cols = other.transpose().entries
            rows = [[_dot(f, r, c) for c in cols] for r in self.entries]
            return ExactMatrix(self.nrows, other.ncols, tuple(map(tuple, rows)), f)
        vec = [f.convert(x) for x in other]
        return tuple(_dot(f, r, vec) for r in self.entries)

    def __repr__(self):
        body = "; ".join(" ".join(str(x) for x in r) for r in self.entries)
        return f"ExactMatrix[{self.field}]({self.nrows}x{self.ncols}: {body})"


def _dot(field, a, b):
    s = sum(x * y for x, y in zip(a, b))
    return s % field.char if field.char else Fraction(s)


def _int_rows(rows):
    """Scale rational rows to primitive integer rows (same row space)."""
    out = []
    for row in rows:
        den = 1
        for x in row:
            if isinstance(x, Fraction) and x.denominator != 1:
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def reduce_rows(rows, ncols: int, field: Field):
    """Reduced echelon form of raw rows.

    Over F_p pivots are 1; over Q the rows are primitive integer rows with a
    positive pivot (not normalized to 1, to stay fraction-free).
    """
    if field.char:
        return rref_mod_p([list(r) for r in rows], ncols, field.char)
    return rref_int(_int_rows(rows), ncols)


def kernel_from_rref(red, pivots, ncols: int, field: Field):
    """Kernel basis from a reduced echelon form, one vector per free column.

    Rational kernel vectors are returned as primitive integer vectors.
    """
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        if field.char:
            p = field.char
            v = [0] * ncols
            v[free] = 1
            for row, c in zip(red, pivots):
                v[c] = (-row[free]) % p
        else:
            scale = 1
            for row, c in zip(red, pivots):
                if row[free]:
                    scale = lcm(scale, row[c])
            v = [0] * ncols
            v[free] = scale
            for row, c in zip(red, pivots):
                if row[free]:
                    v[c] = -row[free] * scale // row[c]
            g = 0
            for x in v:
                g = gcd(g, x)
            if g > 1:
                v = [x // g for x in v]
        basis.append(v)
    return basis


def mat_rank(m: ExactMatrix) -> int:
    _, piv = reduce_rows(m.entries, m.ncols, m.field)
    return len(piv)


def mat_kernel(m: ExactMatrix) -> list[tuple]:
    """Basis of the right null space, ``cols - rank`` vectors."""
    red, piv = reduce_rows(m.entries, m.ncols, m.field)
    basis = kernel_from_rref(red, piv, m.ncols, m.field)
    if m.field.char:
        return [tuple(v) for v in basis]
    return [tuple(Fraction(x) for x in v) for v in basis]


def mat_solve(m: ExactMatrix, b: Sequence) -> tuple | None:
    """One exact solution of ``m x = b`` (free variables set to 0), or None."""
    f = m.field
    if len(b) != m.nrows:
        raise ValueError("right-hand side has the wrong length")
    aug = [list(r) + [f.convert(x)] for r, x in zip(m.entries, b)]
    red, piv = reduce_rows(aug, m.ncols + 1, f)
    if piv and piv[-1] == m.ncols:
        return None
    x = [f.zero()] * m.ncols
    for row, c in zip(red, piv):
        if f.char:
            x[c] = row[-1]
        else:
            x[c] = Fraction(row[-1], row[c])
    return tuple(x)
