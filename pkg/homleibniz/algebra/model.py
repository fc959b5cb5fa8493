"""The Hom-algebra value type and its bilinear product."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Mapping, Sequence

from homleibniz.errors import HomLeibnizError
from homleibniz.linalg.matrix import (
    ZERO,
    DimensionMismatchError,
    Matrix,
    Vector,
    to_scalar,
    unit_vector,
    zero_vector,
)
from homleibniz.linalg.subspace import Subspace

BracketTable = Mapping[tuple[int, int], Mapping[int, int | str | Fraction]]


class AlgebraDefinitionError(HomLeibnizError, ValueError):
    """Raised when structure constants or the twist have inconsistent shapes."""


@dataclass(frozen=True)
class HomAlgebra:
    """
    A finite-dimensional algebra ``(L, [., .], phi)`` over Q.

    ``structure[i][j]`` holds the coordinates of ``[e_i, e_j]``; ``phi`` acts
    on column vectors, so its ``j``-th column is ``phi(e_j)``.
    """

    name: str
    dim: int
    structure: tuple[tuple[Vector, ...], ...]
    phi: Matrix
    labels: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        n = self.dim
        if n < 0:
            raise AlgebraDefinitionError("Dimension must be non-negative.")
        if len(self.structure) != n or any(len(row) != n for row in self.structure):
            raise AlgebraDefinitionError(f"Structure constants must form an {n}x{n} table.")
        for row in self.structure:
            for entry in row:
                if len(entry) != n:
                    raise AlgebraDefinitionError(
                        f"Every product must be a vector of length {n}."
                    )
        if self.phi.shape != (n, n):
            raise AlgebraDefinitionError(f"phi must be {n}x{n}, got {self.phi.shape}.")
        if self.labels and len(self.labels) != n:
            raise AlgebraDefinitionError(f"Expected {n} basis labels, got {len(self.labels)}.")

    @classmethod
    def from_table(
        cls,
        name: str,
        dim: int,
        table: BracketTable,
        phi: Matrix | None = None,
        labels: Sequence[str] = (),
    ) -> HomAlgebra:
        """
        Build an algebra from a sparse bracket table.

        :param name: Algebra name.
        :type name: str
        :param dim: Dimension.
        :type dim: int
        :param table: Map ``(i, j) -> {k: c}`` meaning ``[e_i, e_j] = sum c e_k``.
        :type table: BracketTable
        :param phi: Twist matrix; identity when omitted.
        :type phi: homleibniz.linalg.matrix.Matrix | None
        :param labels: Optional basis names.
        :type labels: collections.abc.Sequence[str]
        :return: The algebra.
        :rtype: HomAlgebra
        :raises AlgebraDefinitionError: If an index is out of range.
        """
        grid = [[[ZERO] * dim for _ in range(dim)] for _ in range(dim)]
        for (i, j), terms in table.items():
            for k, coefficient in terms.items():
                if not (0 <= i < dim and 0 <= j < dim and 0 <= k < dim):
                    raise AlgebraDefinitionError(
                        f"Index out of range in product ({i}, {j}) -> {k} for dimension {dim}."
                    )
                grid[i][j][k] += to_scalar(coefficient)
        structure = tuple(tuple(tuple(entry) for entry in row) for row in grid)
        return cls(
            name=name,
            dim=dim,
            structure=structure,
            phi=phi if phi is not None else Matrix.identity(dim),
            labels=tuple(labels),
        )

    def basis_vector(self, i: int) -> Vector:
        return unit_vector(self.dim, i)

    def label(self, i: int) -> str:
        return self.labels[i] if self.labels else f"e{i + 1}"

    def bracket(self, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
        return bracket_eval(self, x, y)

    def twist(self, v: Sequence[Fraction]) -> Vector:
        return self.phi.apply(v)

    def twist_inverse(self, v: Sequence[Fraction]) -> Vector:
        return self.phi_inverse.apply(v)

    @cached_property
    def phi_columns(self) -> tuple[Vector, ...]:
        return self.phi.columns()

    @cached_property
    def phi_inverse(self) -> Matrix:
        return self.phi.inverse()

    @cached_property
    def phi_invertible(self) -> bool:
        return self.phi.is_invertible()

    @cached_property
    def hom_leibniz_ok(self) -> bool:
        from homleibniz.algebra.identities import check_hom_leibniz

        return check_hom_leibniz(self).holds

    @cached_property
    def automorphism_ok(self) -> bool:
        from homleibniz.algebra.identities import check_regular

        return check_regular(self).holds

    @cached_property
    def is_zero_product(self) -> bool:
        return all(not any(entry) for row in self.structure for entry in row)

    def right_multiplication(self, h: Sequence[Fraction]) -> Matrix:
        """Matrix of ``v -> [v, h]``."""
        columns = [self.bracket(self.basis_vector(j), h) for j in range(self.dim)]
        return Matrix.from_columns(columns, self.dim)

    def left_multiplication(self, x: Sequence[Fraction]) -> Matrix:
        """Matrix of ``v -> [x, v]``."""
        columns = [self.bracket(x, self.basis_vector(j)) for j in range(self.dim)]
        return Matrix.from_columns(columns, self.dim)

    def describe(self, v: Sequence[Fraction]) -> str:
        """Render a vector with basis labels, e.g. ``h + 2e`` or ``-m_-``."""
        terms: list[str] = []
        for i, c in enumerate(v):
            if not c:
                continue
            magnitude = abs(c)
            if magnitude == 1:
                coefficient = ""
            elif magnitude.denominator == 1:
                coefficient = f"{magnitude}"
            else:
                coefficient = f"({magnitude})"
            term = f"{coefficient}{self.label(i)}"
            if not terms:
                terms.append(f"-{term}" if c < 0 else term)
            else:
                terms.append(f"- {term}" if c < 0 else f"+ {term}")
        return " ".join(terms) if terms else "0"

    def describe_span(self, space: Subspace) -> str:
        if space.is_zero:
            return "0"
        return "span{" + ", ".join(self.describe(v) for v in space.basis) + "}"


def bracket_eval(algebra: HomAlgebra, x: Sequence[Fraction], y: Sequence[Fraction]) -> Vector:
    """
    Evaluate ``[x, y] = sum_{i,j} x_i y_j [e_i, e_j]``.

    :param algebra: The algebra.
    :type algebra: HomAlgebra
    :param x: Left operand.
    :type x: collections.abc.Sequence[fractions.Fraction]
    :param y: Right operand.
    :type y: collections.abc.Sequence[fractions.Fraction]
    :return: The product.
    :rtype: homleibniz.linalg.matrix.Vector
    :raises DimensionMismatchError: If an operand has the wrong length.
    """
    n = algebra.dim
    if len(x) != n or len(y) != n:
        raise DimensionMismatchError(
            f"Operands of length {len(x)} and {len(y)} in an algebra of dimension {n}."
        )
    result = list(zero_vector(n))
    for i, xi in enumerate(x):
        if not xi:
            continue
        row = algebra.structure[i]
        for j, yj in enumerate(y):
            if not yj:
                continue
            coefficient = xi * yj
            for k, c in enumerate(row[j]):
                if c:
                    result[k] += coefficient * c
    return tuple(result)
