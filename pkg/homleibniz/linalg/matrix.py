"""Exact rational vectors and matrices.

Scalars are :class:`fractions.Fraction` values; vectors are tuples of them.
Row reduction and characteristic polynomials are delegated to sympy's
``DomainMatrix`` over ``QQ`` so no floating point value is ever produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from sympy import Matrix as SympyMatrix
from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from homleibniz.errors import HomLeibnizError

Scalar = Fraction
Vector = tuple[Fraction, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class DimensionMismatchError(HomLeibnizError, ValueError):
    """Raised when operand shapes or ambient dimensions disagree."""


class SingularMatrixError(HomLeibnizError, ValueError):
    """Raised when an inverse is requested for a singular matrix."""


def to_scalar(value: int | str | Fraction) -> Fraction:
    """
    Coerce an integer, rational string or fraction into a scalar.

    :param value: Value to coerce.
    :type value: int | str | fractions.Fraction
    :return: Exact scalar.
    :rtype: fractions.Fraction
    """
    return value if isinstance(value, Fraction) else Fraction(value)


def vector(values: Iterable[int | str | Fraction]) -> Vector:
    return tuple(to_scalar(v) for v in values)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def is_zero_vector(v: Sequence[Fraction]) -> bool:
    return not any(v)


def vec_add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    _check_lengths(u, v)
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    _check_lengths(u, v)
    return tuple(a - b for a, b in zip(u, v))


def vec_scale(c: Fraction, v: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in v)


def linear_combination(
    coefficients: Sequence[Fraction], vectors: Sequence[Vector], n: int
) -> Vector:
    """
    Return ``sum(c_i * v_i)`` in an ``n``-dimensional space.

    :param coefficients: Scalars, one per vector.
    :type coefficients: collections.abc.Sequence[fractions.Fraction]
    :param vectors: Vectors of length ``n``.
    :type vectors: collections.abc.Sequence[Vector]
    :param n: Ambient dimension (used when ``vectors`` is empty).
    :type n: int
    :return: The combination.
    :rtype: Vector
    """
    total = [ZERO] * n
    for c, v in zip(coefficients, vectors):
        if not c:
            continue
        for k, a in enumerate(v):
            if a:
                total[k] += c * a
    return tuple(total)


def _check_lengths(u: Sequence[Fraction], v: Sequence[Fraction]) -> None:
    if len(u) != len(v):
        raise DimensionMismatchError(f"Vector lengths differ: {len(u)} != {len(v)}.")


@dataclass(frozen=True)
class Matrix:
    """Immutable rectangular matrix of exact rationals."""

    rows: tuple[Vector, ...]
    ncols: int

    def __post_init__(self) -> None:
        for row in self.rows:
            if len(row) != self.ncols:
                raise DimensionMismatchError(
                    f"Row of length {len(row)} in a matrix with {self.ncols} columns."
                )

    @classmethod
    def from_rows(
        cls, rows: Iterable[Iterable[int | str | Fraction]], ncols: int | None = None
    ) -> Matrix:
        materialized = tuple(vector(row) for row in rows)
        if ncols is None:
            if not materialized:
                raise DimensionMismatchError("Column count is required for an empty matrix.")
            ncols = len(materialized[0])
        return cls(rows=materialized, ncols=ncols)

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence[Fraction]], nrows: int) -> Matrix:
        for column in columns:
            if len(column) != nrows:
                raise DimensionMismatchError(
                    f"Column of length {len(column)} in a matrix with {nrows} rows."
                )
        rows = tuple(tuple(column[i] for column in columns) for i in range(nrows))
        return cls(rows=rows, ncols=len(columns))

    @classmethod
    def identity(cls, n: int) -> Matrix:
        return cls(rows=tuple(unit_vector(n, i) for i in range(n)), ncols=n)

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> Matrix:
        return cls(rows=tuple(zero_vector(ncols) for _ in range(nrows)), ncols=ncols)

    @classmethod
    def diagonal(cls, entries: Sequence[int | str | Fraction]) -> Matrix:
        n = len(entries)
        return cls(
            rows=tuple(
                tuple(to_scalar(entries[i]) if i == j else ZERO for j in range(n))
                for i in range(n)
            ),
            ncols=n,
        )

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.rows)

    def columns(self) -> tuple[Vector, ...]:
        return tuple(self.column(j) for j in range(self.ncols))

    def transpose(self) -> Matrix:
        return Matrix(rows=self.columns(), ncols=self.nrows)

    def apply(self, v: Sequence[Fraction]) -> Vector:
        """
        Multiply this matrix by a column vector.

        :param v: Vector of length ``ncols``.
        :type v: collections.abc.Sequence[fractions.Fraction]
        :return: Image vector of length ``nrows``.
        :rtype: Vector
        :raises DimensionMismatchError: If the vector length is wrong.
        """
        if len(v) != self.ncols:
            raise DimensionMismatchError(
                f"Cannot apply a {self.nrows}x{self.ncols} matrix to a vector of length {len(v)}."
            )
        return tuple(sum((a * b for a, b in zip(row, v) if a and b), ZERO) for row in self.rows)

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.ncols != other.nrows:
            raise DimensionMismatchError(
                f"Cannot multiply {self.nrows}x{self.ncols} by {other.nrows}x{other.ncols}."
            )
        columns = [self.apply(other.column(j)) for j in range(other.ncols)]
        return Matrix.from_columns(columns, self.nrows)

    def __add__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        rows = tuple(vec_add(a, b) for a, b in zip(self.rows, other.rows))
        return Matrix(rows=rows, ncols=self.ncols)

    def __sub__(self, other: Matrix) -> Matrix:
        self._check_same_shape(other)
        rows = tuple(vec_sub(a, b) for a, b in zip(self.rows, other.rows))
        return Matrix(rows=rows, ncols=self.ncols)

    def scale(self, c: Fraction) -> Matrix:
        return Matrix(rows=tuple(vec_scale(c, row) for row in self.rows), ncols=self.ncols)

    def is_zero(self) -> bool:
        return all(is_zero_vector(row) for row in self.rows)

    @cached_property
    def rank(self) -> int:
        return len(rref(self)[1])

    def is_invertible(self) -> bool:
        return self.is_square and self.rank == self.nrows

    def inverse(self) -> Matrix:
        """
        Return the exact inverse.

        :return: Inverse matrix.
        :rtype: Matrix
        :raises SingularMatrixError: If the matrix is not square or not invertible.
        """
        if not self.is_square:
            raise SingularMatrixError(f"A {self.nrows}x{self.ncols} matrix has no inverse.")
        n = self.nrows
        augmented = Matrix(
            rows=tuple(row + unit_vector(n, i) for i, row in enumerate(self.rows)),
            ncols=2 * n,
        )
        reduced, pivots = rref(augmented)
        if tuple(pivots[:n]) != tuple(range(n)) or len(pivots) > n:
            raise SingularMatrixError("Matrix is singular.")
        return Matrix(rows=tuple(row[n:] for row in reduced.rows), ncols=n)

    def power(self, z: int) -> Matrix:
        """
        Return ``self ** z``; negative exponents use the inverse.

        :param z: Integer exponent.
        :type z: int
        :return: Matrix power.
        :rtype: Matrix
        :raises SingularMatrixError: If ``z < 0`` and the matrix is singular.
        """
        if not self.is_square:
            raise DimensionMismatchError("Only square matrices have powers.")
        base = self.inverse() if z < 0 else self
        result = Matrix.identity(self.nrows)
        for _ in range(abs(z)):
            result = result @ base
        return result

    def _check_same_shape(self, other: Matrix) -> None:
        if self.shape != other.shape:
            raise DimensionMismatchError(f"Shapes differ: {self.shape} != {other.shape}.")


def to_domain_matrix(m: Matrix) -> DomainMatrix:
    rows = [[QQ(x.numerator, x.denominator) for x in row] for row in m.rows]
    return DomainMatrix(rows, m.shape, QQ)


def from_sympy_matrix(sm: SympyMatrix) -> Matrix:
    rows = tuple(
        tuple(Fraction(int(sm[i, j].p), int(sm[i, j].q)) for j in range(sm.cols))
        for i in range(sm.rows)
    )
    return Matrix(rows=rows, ncols=sm.cols)


def rref(m: Matrix) -> tuple[Matrix, tuple[int, ...]]:
    """
    Reduced row-echelon form and pivot columns.

    :param m: Input matrix.
    :type m: Matrix
    :return: The unique RREF (same shape as ``m``) and its pivot columns.
    :rtype: tuple[Matrix, tuple[int, ...]]
    """
    if m.nrows == 0 or m.ncols == 0 or m.is_zero():
        return Matrix.zeros(m.nrows, m.ncols), ()
    reduced, pivots = to_domain_matrix(m).rref()
    return from_sympy_matrix(reduced.to_Matrix()), tuple(int(p) for p in pivots)
