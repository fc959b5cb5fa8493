"""Rational eigenvalues and simultaneous eigenspace refinement."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Sequence

from sympy import Poly, Symbol
from sympy.polys.domains import QQ

from homleibniz.linalg.matrix import DimensionMismatchError, Matrix, Vector, to_domain_matrix
from homleibniz.linalg.subspace import Subspace, kernel

logger = logging.getLogger(__name__)

_X = Symbol("x")


def rational_eigenvalues(m: Matrix) -> list[tuple[Fraction, int]]:
    """
    Rational roots of the characteristic polynomial with multiplicities.

    Irrational eigenvalues are simply absent from the result.

    :param m: Square matrix.
    :type m: homleibniz.linalg.matrix.Matrix
    :return: ``(eigenvalue, algebraic multiplicity)`` pairs sorted by eigenvalue.
    :rtype: list[tuple[fractions.Fraction, int]]
    :raises DimensionMismatchError: If ``m`` is not square.
    """
    if not m.is_square:
        raise DimensionMismatchError(f"Eigenvalues need a square matrix, got {m.shape}.")
    if m.nrows == 0:
        return []
    coefficients = [QQ.to_sympy(c) for c in to_domain_matrix(m).charpoly()]
    _, factors = Poly(coefficients, _X, domain=QQ).factor_list()
    found: list[tuple[Fraction, int]] = []
    for factor, multiplicity in factors:
        if factor.degree() != 1:
            continue
        a, b = factor.all_coeffs()
        root = -b / a
        found.append((Fraction(int(root.p), int(root.q)), int(multiplicity)))
    return sorted(found)


def simultaneous_eigenspaces(
    ops: Sequence[Matrix], ambient_dim: int
) -> list[tuple[Vector, Subspace]]:
    """
    Refine the ambient space by the rational eigenspaces of each operator in turn.

    :param ops: Square operators of size ``ambient_dim``.
    :type ops: collections.abc.Sequence[homleibniz.linalg.matrix.Matrix]
    :param ambient_dim: Dimension of the space acted on.
    :type ambient_dim: int
    :return: ``(value vector, piece)`` pairs, sorted by value vector. Pieces are
        independent but need not span the ambient space.
    :rtype: list[tuple[Vector, homleibniz.linalg.subspace.Subspace]]
    :raises DimensionMismatchError: If an operator has the wrong shape.
    """
    pieces: list[tuple[Vector, Subspace]] = [((), Subspace.full(ambient_dim))]
    identity = Matrix.identity(ambient_dim)
    for index, op in enumerate(ops):
        if op.shape != (ambient_dim, ambient_dim):
            raise DimensionMismatchError(
                f"Operator {index} has shape {op.shape}, expected {ambient_dim}x{ambient_dim}."
            )
        eigenspaces = [
            (value, kernel(op - identity.scale(value))) for value, _ in rational_eigenvalues(op)
        ]
        refined: list[tuple[Vector, Subspace]] = []
        for values, piece in pieces:
            for value, eigenspace in eigenspaces:
                common = piece.intersect(eigenspace)
                if not common.is_zero:
                    refined.append((values + (value,), common))
        pieces = refined
        logger.debug("Operator %d refined the space into %d pieces.", index, len(pieces))
    return sorted(pieces, key=lambda item: item[0])
