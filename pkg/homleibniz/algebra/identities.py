"""Brute-force identity checks on basis tuples.

Every identity below is multilinear, so checking it on basis elements is
complete. A failing check carries the first offending index tuple together
with its nonzero residual.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass

from homleibniz.algebra.model import HomAlgebra
from homleibniz.linalg.matrix import Vector, is_zero_vector, vec_add, vec_sub
from homleibniz.linalg.subspace import kernel

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Witness:
    """Indices that violate a property and the nonzero residual they produce."""

    indices: tuple[int, ...]
    residual: Vector
    note: str = ""


@dataclass(frozen=True)
class IdentityReport:
    """Outcome of one property check."""

    name: str
    holds: bool
    witness: Witness | None = None
    message: str = ""
    applicable: bool = True


def passed(name: str, message: str = "") -> IdentityReport:
    return IdentityReport(name=name, holds=True, message=message or f"{name} holds")


def not_applicable(name: str, message: str) -> IdentityReport:
    """A check whose hypotheses fail; it counts as holding but was never run."""
    return IdentityReport(name=name, holds=True, message=message, applicable=False)


def failed(
    name: str, indices: tuple[int, ...], residual: Vector, message: str, note: str = ""
) -> IdentityReport:
    return IdentityReport(
        name=name,
        holds=False,
        witness=Witness(indices=indices, residual=residual, note=note),
        message=message,
    )


def _leibniz_residual(algebra: HomAlgebra, i: int, j: int, k: int) -> Vector:
    products = algebra.structure
    twists = algebra.phi_columns
    return vec_sub(
        vec_sub(
            algebra.bracket(products[i][j], twists[k]),
            algebra.bracket(products[i][k], twists[j]),
        ),
        algebra.bracket(twists[i], products[j][k]),
    )


def _multiplicativity_residual(algebra: HomAlgebra, i: int, j: int) -> Vector:
    twists = algebra.phi_columns
    return vec_sub(algebra.twist(algebra.structure[i][j]), algebra.bracket(twists[i], twists[j]))


def _antisymmetry_residual(algebra: HomAlgebra, i: int, j: int) -> Vector:
    return vec_add(algebra.structure[i][j], algebra.structure[j][i])


def _jacobi_residual(algebra: HomAlgebra, i: int, j: int, k: int) -> Vector:
    products = algebra.structure
    twists = algebra.phi_columns
    return vec_add(
        vec_add(
            algebra.bracket(products[i][j], twists[k]),
            algebra.bracket(products[j][k], twists[i]),
        ),
        algebra.bracket(products[k][i], twists[j]),
    )


def check_hom_leibniz(algebra: HomAlgebra) -> IdentityReport:
    """
    Check ``[[y, z], phi(x)] = [[y, x], phi(z)] + [phi(y), [z, x]]`` on basis triples.

    :param algebra: Algebra to check.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :return: Report; on failure the witness is ``(i, j, k)`` for ``y=e_i, z=e_j, x=e_k``.
    :rtype: IdentityReport
    """
    name = "hom_leibniz"
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                residual = _leibniz_residual(algebra, i, j, k)
                if not is_zero_vector(residual):
                    labels = (algebra.label(i), algebra.label(j), algebra.label(k))
                    return failed(
                        name,
                        (i, j, k),
                        residual,
                        "Hom-Leibniz identity fails at ({}, {}, {}): residual {}".format(
                            *labels, algebra.describe(residual)
                        ),
                    )
    logger.debug("Hom-Leibniz identity verified on %d triples of %s.", n**3, algebra.name)
    return passed(name, "Hom-Leibniz identity holds")


def check_regular(algebra: HomAlgebra) -> IdentityReport:
    """
    Check that ``phi`` is invertible and multiplicative on basis pairs.

    :param algebra: Algebra to check.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :return: Report. A singular ``phi`` yields a witness whose residual is a kernel vector.
    :rtype: IdentityReport
    """
    name = "regular"
    if not algebra.phi_invertible:
        null = kernel(algebra.phi).basis[0]
        return failed(
            name,
            (),
            null,
            f"phi is not invertible: phi({algebra.describe(null)}) = 0",
            note="kernel vector of phi",
        )
    n = algebra.dim
    for i in range(n):
        for j in range(n):
            residual = _multiplicativity_residual(algebra, i, j)
            if not is_zero_vector(residual):
                a, b = algebra.label(i), algebra.label(j)
                return failed(
                    name, (i, j), residual, f"phi([{a}, {b}]) ≠ [phi({a}), phi({b})]"
                )
    return passed(name, "phi is an algebra automorphism")


def check_hom_lie(algebra: HomAlgebra) -> IdentityReport:
    """
    Check antisymmetry on basis pairs and the cyclic Hom-Jacobi identity on triples.

    :param algebra: Algebra to check.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :return: Report with a pair witness (antisymmetry) or a triple witness (Hom-Jacobi).
    :rtype: IdentityReport
    """
    name = "hom_lie"
    n = algebra.dim
    for i in range(n):
        for j in range(i, n):
            residual = _antisymmetry_residual(algebra, i, j)
            if not is_zero_vector(residual):
                a, b = algebra.label(i), algebra.label(j)
                return failed(
                    name, (i, j), residual, f"[{b}, {a}] ≠ −[{a}, {b}]", note="antisymmetry"
                )
    for i in range(n):
        for j in range(n):
            for k in range(n):
                residual = _jacobi_residual(algebra, i, j, k)
                if not is_zero_vector(residual):
                    labels = (algebra.label(i), algebra.label(j), algebra.label(k))
                    return failed(
                        name,
                        (i, j, k),
                        residual,
                        "Hom-Jacobi identity fails at ({}, {}, {})".format(*labels),
                        note="hom-jacobi",
                    )
    return passed(name, "Hom-Lie identities hold")


def recompute_residual(algebra: HomAlgebra, report: IdentityReport) -> Vector | None:
    """
    Recompute the residual of a failed report from its witness indices.

    :param algebra: Algebra the report was produced for.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param report: A report produced by one of the checks in this module.
    :type report: IdentityReport
    :return: Recomputed residual, or ``None`` when the report has no witness.
    :rtype: homleibniz.linalg.matrix.Vector | None
    """
    if report.witness is None:
        return None
    indices = report.witness.indices
    if report.name == "hom_leibniz":
        return _leibniz_residual(algebra, *indices)
    if report.name == "regular" and indices:
        return _multiplicativity_residual(algebra, *indices)
    if report.name == "hom_lie":
        if len(indices) == 2:
            return _antisymmetry_residual(algebra, *indices)
        return _jacobi_residual(algebra, *indices)
    return report.witness.residual
