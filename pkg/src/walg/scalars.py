"""Exact rational scalars and small dense exact linear algebra.

Every scalar in the math core is a `fractions.Fraction`: arithmetic is exact,
values are kept in lowest terms with a positive denominator, and floats are
rejected at the boundary so binary rounding can never leak in.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Union

Rational = Fraction
RationalLike = Union[int, str, Fraction]

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

__all__ = [
    "Rational",
    "Vector",
    "Matrix",
    "DimensionError",
    "SingularMatrixError",
    "rational",
    "rational_str",
    "vector",
    "matrix",
    "identity",
    "mat_vec",
    "solve_linear",
]


class DimensionError(ValueError):
    """Operands have incompatible or non-square dimensions."""


class SingularMatrixError(ValueError):
    """A linear solve hit a singular matrix; carries the rank reached."""

    def __init__(self, rank: int):
        super().__init__(f"singular matrix (rank {rank})")
        self.rank = rank


_RATIONAL_TEXT = re.compile(r"[+-]?\d+(?:/\d+)?")


def rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or ``p/q`` string to an exact Fraction.

    Strings must be integers or fractions; decimal notation is rejected so
    no precision question can ever arise.
    """
    if type(value) is Fraction:
        return value
    if isinstance(value, float):
        raise TypeError("floats are not exact; pass an int, Fraction, or 'p/q' string")
    if isinstance(value, str):
        text = value.strip()
        if not _RATIONAL_TEXT.fullmatch(text):
            raise ValueError(f"not a p/q rational: {value!r}")
        return Fraction(text)
    return Fraction(value)


def rational_str(value: RationalLike) -> str:
    """Render as ``p/q``, or plain ``n`` when the denominator is 1."""
    value = rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def vector(entries: Iterable[RationalLike]) -> Vector:
    return tuple(rational(x) for x in entries)


def matrix(rows: Iterable[Iterable[RationalLike]]) -> Matrix:
    out = tuple(vector(r) for r in rows)
    if out and any(len(r) != len(out[0]) for r in out):
        raise DimensionError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def mat_vec(a: Matrix, x: Vector) -> Vector:
    if any(len(row) != len(x) for row in a):
        raise DimensionError("matrix/vector dimensions do not match")
    return tuple(sum((row[j] * x[j] for j in range(len(x))), Fraction(0)) for row in a)


def solve_linear(a: Matrix, b: Vector) -> Vector:
    """Solve ``A x = b`` exactly by Gaussian elimination.

    Pivoting takes the first nonzero entry in each column; there is no
    tolerance anywhere, a pivot is either zero or usable.  A must be square
    and nonsingular: a singular A raises :class:`SingularMatrixError`
    carrying the rank that was reached.
    """
    n = len(a)
    if any(len(row) != n for row in a):
        raise DimensionError("solve_linear needs a square matrix")
    if len(b) != n:
        raise DimensionError("right-hand side length does not match the matrix")
    aug = [[rational(v) for v in row] + [rational(bv)] for row, bv in zip(a, b)]
    rank = 0
    for col in range(n):
        pivot = next((r for r in range(rank, n) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[rank], aug[pivot] = aug[pivot], aug[rank]
        inv = 1 / aug[rank][col]
        aug[rank] = [v * inv for v in aug[rank]]
        for r in range(n):
            if r != rank and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [v - f * w for v, w in zip(aug[r], aug[rank])]
        rank += 1
    if rank < n:
        raise SingularMatrixError(rank)
    return tuple(row[n] for row in aug)
