"""Algebras built from other algebras: the semidirect Hom-Lie product and Yau twists."""

from __future__ import annotations

import logging

from homleibniz.algebra.ideals import compute_J
from homleibniz.algebra.identities import check_hom_leibniz, check_regular
from homleibniz.algebra.model import HomAlgebra
from homleibniz.errors import HomLeibnizError, InternalInconsistencyError
from homleibniz.linalg.matrix import Matrix, Vector, vec_sub, zero_vector
from homleibniz.linalg.subspace import Subspace

logger = logging.getLogger(__name__)


class NotAutomorphismError(HomLeibnizError, ValueError):
    """Raised when a twisting map is not an automorphism of the Hom-algebra."""


class QuotientByJ:
    """Coordinates on ``L/J`` through the complement spanned by non-pivot coordinates of J."""

    def __init__(self, j_ideal: Subspace) -> None:
        self.j_ideal = j_ideal
        self.columns = tuple(
            c for c in range(j_ideal.ambient_dim) if c not in set(j_ideal.pivots)
        )

    @property
    def dim(self) -> int:
        return len(self.columns)

    def project(self, v: Vector) -> Vector:
        residual = self.j_ideal.reduce(v)
        return tuple(residual[c] for c in self.columns)


def semidirect_product(algebra: HomAlgebra, j_ideal: Subspace | None = None) -> HomAlgebra:
    """
    Build ``L ⋊ L/J`` with ``[(a, x+J), (b, y+J)] = ([a, y] - [b, x], [x, y] + J)``.

    The twist is ``phi`` on the first summand and the induced map on ``L/J``.
    Basis order is ``(e_i, 0)`` followed by ``(0, e_c + J)`` for each
    complement coordinate ``c``.

    :param algebra: A Hom-Leibniz algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param j_ideal: J when already known; computed otherwise.
    :type j_ideal: homleibniz.linalg.subspace.Subspace | None
    :return: A Hom-Lie algebra of dimension ``2n - dim J``.
    :rtype: homleibniz.algebra.model.HomAlgebra
    :raises JNotLeftCentralError: If J cannot be computed consistently.
    """
    if j_ideal is None:
        j_ideal = compute_J(algebra)
    n = algebra.dim
    quotient = QuotientByJ(j_ideal)
    q = quotient.dim
    total = n + q

    def embed(first: Vector, second: Vector) -> Vector:
        return tuple(first) + tuple(second)

    zero_q = zero_vector(q)
    zero_n = zero_vector(n)
    grid: list[list[Vector]] = [[zero_vector(total)] * total for _ in range(total)]
    for i in range(n):
        e_i = algebra.basis_vector(i)
        for slot, c in enumerate(quotient.columns):
            e_c = algebra.basis_vector(c)
            grid[i][n + slot] = embed(algebra.bracket(e_i, e_c), zero_q)
            grid[n + slot][i] = embed(tuple(-x for x in algebra.bracket(e_i, e_c)), zero_q)
    for slot_c, c in enumerate(quotient.columns):
        for slot_d, d in enumerate(quotient.columns):
            value = algebra.structure[c][d]
            grid[n + slot_c][n + slot_d] = embed(zero_n, quotient.project(value))

    columns: list[Vector] = []
    for i in range(n):
        columns.append(embed(algebra.twist(algebra.basis_vector(i)), zero_q))
    for c in quotient.columns:
        columns.append(embed(zero_n, quotient.project(algebra.twist(algebra.basis_vector(c)))))

    labels = [f"({algebra.label(i)},0)" for i in range(n)]
    labels.extend(f"(0,{algebra.label(c)}+J)" for c in quotient.columns)
    logger.debug("Semidirect product of %s has dimension %d.", algebra.name, total)
    return HomAlgebra(
        name=f"{algebra.name}_semidirect",
        dim=total,
        structure=tuple(tuple(row) for row in grid),
        phi=Matrix.from_columns(columns, total),
        labels=tuple(labels),
    )


def yau_twist(algebra: HomAlgebra, psi: Matrix, name: str | None = None) -> HomAlgebra:
    """
    Compose the product and the twist with an automorphism ``psi``.

    :param algebra: Source algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param psi: Invertible, multiplicative map commuting with ``phi``.
    :type psi: homleibniz.linalg.matrix.Matrix
    :param name: Name of the result; defaults to ``<name>_twisted``.
    :type name: str | None
    :return: Algebra with product ``psi∘[.,.]`` and twist ``psi∘phi``.
    :rtype: homleibniz.algebra.model.HomAlgebra
    :raises NotAutomorphismError: If ``psi`` is singular, not multiplicative, or
        does not commute with ``phi``.
    :raises InternalInconsistencyError: If a regular Hom-Leibniz input produced an invalid result.
    """
    n = algebra.dim
    if psi.shape != (n, n):
        raise NotAutomorphismError(f"psi must be {n}x{n}, got {psi.shape}.")
    if not psi.is_invertible():
        raise NotAutomorphismError("psi is not invertible.")
    images = psi.columns()
    for i in range(n):
        for j in range(n):
            residual = vec_sub(
                psi.apply(algebra.structure[i][j]), algebra.bracket(images[i], images[j])
            )
            if any(residual):
                a, b = algebra.label(i), algebra.label(j)
                raise NotAutomorphismError(
                    f"psi([{a}, {b}]) ≠ [psi({a}), psi({b})]", witness=(i, j)
                )
    if psi @ algebra.phi != algebra.phi @ psi:
        raise NotAutomorphismError("psi does not commute with phi.")

    structure = tuple(tuple(psi.apply(entry) for entry in row) for row in algebra.structure)
    twisted = HomAlgebra(
        name=name or f"{algebra.name}_twisted",
        dim=n,
        structure=structure,
        phi=psi @ algebra.phi,
        labels=algebra.labels,
    )
    if algebra.hom_leibniz_ok and algebra.automorphism_ok:
        for report in (check_hom_leibniz(twisted), check_regular(twisted)):
            if not report.holds:
                raise InternalInconsistencyError(
                    f"Twist of {algebra.name} broke {report.name}: {report.message}"
                )
    return twisted
