"""Subspaces of Q^n in canonical reduced row-echelon form."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from homleibniz.linalg.matrix import (
    ONE,
    ZERO,
    DimensionMismatchError,
    Matrix,
    Vector,
    is_zero_vector,
    rref,
    unit_vector,
    vector,
)


@dataclass(frozen=True)
class Subspace:
    """A subspace stored as its RREF basis; equal subspaces compare equal."""

    ambient_dim: int
    basis: tuple[Vector, ...]
    pivots: tuple[int, ...]

    @classmethod
    def span(cls, vectors: Iterable[Sequence[Fraction]], ambient_dim: int) -> Subspace:
        """
        Span of arbitrary vectors.

        :param vectors: Generators, each of length ``ambient_dim``.
        :type vectors: collections.abc.Iterable[collections.abc.Sequence[fractions.Fraction]]
        :param ambient_dim: Dimension of the ambient space.
        :type ambient_dim: int
        :return: Canonical subspace.
        :rtype: Subspace
        :raises DimensionMismatchError: If a generator has the wrong length.
        """
        rows = []
        for v in vectors:
            if len(v) != ambient_dim:
                raise DimensionMismatchError(
                    f"Vector of length {len(v)} in ambient dimension {ambient_dim}."
                )
            if not is_zero_vector(v):
                rows.append(vector(v))
        if not rows:
            return cls.zero(ambient_dim)
        reduced, pivots = rref(Matrix(rows=tuple(rows), ncols=ambient_dim))
        return cls(ambient_dim=ambient_dim, basis=reduced.rows[: len(pivots)], pivots=pivots)

    @classmethod
    def zero(cls, ambient_dim: int) -> Subspace:
        return cls(ambient_dim=ambient_dim, basis=(), pivots=())

    @classmethod
    def full(cls, ambient_dim: int) -> Subspace:
        return cls(
            ambient_dim=ambient_dim,
            basis=tuple(unit_vector(ambient_dim, i) for i in range(ambient_dim)),
            pivots=tuple(range(ambient_dim)),
        )

    @classmethod
    def coordinate(cls, indices: Iterable[int], ambient_dim: int) -> Subspace:
        return cls.span((unit_vector(ambient_dim, i) for i in indices), ambient_dim)

    @property
    def dim(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    @property
    def is_full(self) -> bool:
        return self.dim == self.ambient_dim

    def reduce(self, v: Sequence[Fraction]) -> Vector:
        """
        Residual of ``v`` after eliminating every pivot coordinate.

        The residual is supported on non-pivot columns and is zero exactly
        when ``v`` lies in the subspace.
        """
        self._check_vector(v)
        residual = list(v)
        for row, pivot in zip(self.basis, self.pivots):
            c = residual[pivot]
            if c:
                for k, a in enumerate(row):
                    if a:
                        residual[k] -= c * a
        return tuple(residual)

    def contains(self, other: Sequence[Fraction] | Subspace) -> bool:
        if isinstance(other, Subspace):
            self._check_ambient(other)
            return all(self.contains(v) for v in other.basis)
        return is_zero_vector(self.reduce(other))

    def __add__(self, other: Subspace) -> Subspace:
        self._check_ambient(other)
        if other.is_zero:
            return self
        if self.is_zero:
            return other
        return Subspace.span(self.basis + other.basis, self.ambient_dim)

    def intersect(self, other: Subspace) -> Subspace:
        self._check_ambient(other)
        if self.is_zero or other.is_zero:
            return Subspace.zero(self.ambient_dim)
        if self.contains(other):
            return other
        if other.contains(self):
            return self
        constraints = self.orthogonal().basis + other.orthogonal().basis
        return kernel(Matrix(rows=constraints, ncols=self.ambient_dim))

    def orthogonal(self) -> Subspace:
        """Vectors ``w`` with ``b . w = 0`` for every basis row ``b``."""
        return kernel(Matrix(rows=self.basis, ncols=self.ambient_dim))

    def complement_from(self, candidates: Iterable[Sequence[Fraction]]) -> Subspace:
        """
        Pivot-completion complement: greedily add candidates that leave the span.

        :param candidates: Vectors tried in order.
        :type candidates: collections.abc.Iterable[collections.abc.Sequence[fractions.Fraction]]
        :return: Subspace spanned by the accepted candidates.
        :rtype: Subspace
        """
        current = self
        accepted: list[Vector] = []
        for candidate in candidates:
            if not current.contains(candidate):
                accepted.append(vector(candidate))
                current = current + Subspace.span([candidate], self.ambient_dim)
        return Subspace.span(accepted, self.ambient_dim)

    def _check_ambient(self, other: Subspace) -> None:
        if self.ambient_dim != other.ambient_dim:
            raise DimensionMismatchError(
                f"Ambient dimensions differ: {self.ambient_dim} != {other.ambient_dim}."
            )

    def _check_vector(self, v: Sequence[Fraction]) -> None:
        if len(v) != self.ambient_dim:
            raise DimensionMismatchError(
                f"Vector of length {len(v)} in ambient dimension {self.ambient_dim}."
            )


def kernel(m: Matrix) -> Subspace:
    """
    Null space ``{v : m v = 0}``.

    :param m: Any matrix; a matrix with no rows has the whole space as kernel.
    :type m: Matrix
    :return: Kernel subspace of dimension ``cols - rank``.
    :rtype: Subspace
    """
    n = m.ncols
    reduced, pivots = rref(m)
    free = [j for j in range(n) if j not in pivots]
    generators = []
    for f in free:
        v = [ZERO] * n
        v[f] = ONE
        for row, pivot in zip(reduced.rows, pivots):
            v[pivot] = -row[f]
        generators.append(tuple(v))
    return Subspace.span(generators, n)


def subspace_sum(a: Subspace, b: Subspace) -> Subspace:
    return a + b


def subspace_intersect(a: Subspace, b: Subspace) -> Subspace:
    return a.intersect(b)


def contains(a: Subspace, x: Sequence[Fraction] | Subspace) -> bool:
    return a.contains(x)


def sum_all(spaces: Iterable[Subspace], ambient_dim: int) -> Subspace:
    total = Subspace.zero(ambient_dim)
    for space in spaces:
        total = total + space
    return total


def solve_coordinates(basis: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> Vector | None:
    """
    Coordinates of ``v`` in a linearly independent ``basis``.

    :param basis: Independent vectors.
    :type basis: collections.abc.Sequence[collections.abc.Sequence[fractions.Fraction]]
    :param v: Target vector.
    :type v: collections.abc.Sequence[fractions.Fraction]
    :return: Coefficients ``c`` with ``sum(c_i b_i) = v``, or ``None`` if ``v`` is
        outside the span.
    :rtype: Vector | None
    """
    k = len(basis)
    if k == 0:
        return () if is_zero_vector(v) else None
    augmented = Matrix.from_columns([*basis, v], len(v))
    reduced, pivots = rref(augmented)
    if k in pivots:
        return None
    if pivots != tuple(range(k)):
        raise DimensionMismatchError("Coordinate basis is linearly dependent.")
    return tuple(reduced.rows[i][k] for i in range(k))
