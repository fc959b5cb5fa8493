"""Ideal closures, the square ideal J, annihilators and the derived subalgebra."""

from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Iterable, Sequence

from homleibniz.algebra.model import HomAlgebra
from homleibniz.errors import HomLeibnizError
from homleibniz.linalg.matrix import (
    DimensionMismatchError,
    Matrix,
    Vector,
    is_zero_vector,
    vec_add,
)
from homleibniz.linalg.subspace import Subspace, kernel

if TYPE_CHECKING:
    from homleibniz.diagnostics.jsplit import JSplit
    from homleibniz.roots.decomposition import SplitDecomposition

logger = logging.getLogger(__name__)


class JNotLeftCentralError(HomLeibnizError, ValueError):
    """Raised when the computed J fails ``[L, J] = 0``."""


def product(algebra: HomAlgebra, left: Subspace, right: Subspace) -> Subspace:
    """
    The span ``[left, right]`` of all products of basis vectors.

    :param algebra: The algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param left: Left factor.
    :type left: homleibniz.linalg.subspace.Subspace
    :param right: Right factor.
    :type right: homleibniz.linalg.subspace.Subspace
    :return: Span of ``[x, y]`` for ``x`` in ``left`` and ``y`` in ``right``.
    :rtype: homleibniz.linalg.subspace.Subspace
    """
    return Subspace.span(
        (algebra.bracket(x, y) for x in left.basis for y in right.basis), algebra.dim
    )


def first_nonzero_product(
    algebra: HomAlgebra, left: Subspace, right: Subspace
) -> Vector | None:
    for x in left.basis:
        for y in right.basis:
            value = algebra.bracket(x, y)
            if not is_zero_vector(value):
                return value
    return None


def ideal_closure(algebra: HomAlgebra, seed: Subspace) -> Subspace:
    """
    Smallest ideal containing ``seed``.

    Closes under ``v -> [v, e_j]``, ``v -> [e_j, v]``, ``phi`` and, when it
    exists, ``phi^-1``. Each round strictly grows the dimension until stable.

    :param algebra: The algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param seed: Generating subspace.
    :type seed: homleibniz.linalg.subspace.Subspace
    :return: The generated ideal.
    :rtype: homleibniz.linalg.subspace.Subspace
    :raises DimensionMismatchError: If ``seed`` lives in another ambient space.
    """
    n = algebra.dim
    if seed.ambient_dim != n:
        raise DimensionMismatchError(
            f"Seed lives in dimension {seed.ambient_dim}, algebra has dimension {n}."
        )
    basis = [algebra.basis_vector(j) for j in range(n)]
    invertible = algebra.phi_invertible
    current = seed
    rounds = 0
    while True:
        images: list[Vector] = []
        for v in current.basis:
            for e in basis:
                images.append(algebra.bracket(v, e))
                images.append(algebra.bracket(e, v))
            images.append(algebra.twist(v))
            if invertible:
                images.append(algebra.twist_inverse(v))
        grown = current + Subspace.span(images, n)
        rounds += 1
        if grown.dim == current.dim:
            logger.debug("Ideal closure stabilised at dim %d after %d rounds.", grown.dim, rounds)
            return current
        current = grown


def is_ideal(algebra: HomAlgebra, space: Subspace) -> bool:
    return ideal_closure(algebra, space) == space


def square_generators(algebra: HomAlgebra) -> Subspace:
    """Span of ``[e_i, e_i]`` and ``[e_i, e_j] + [e_j, e_i]``, which equals ``span{[x, x]}``."""
    n = algebra.dim
    seeds = [algebra.structure[i][i] for i in range(n)]
    seeds.extend(
        vec_add(algebra.structure[i][j], algebra.structure[j][i])
        for i in range(n)
        for j in range(i + 1, n)
    )
    return Subspace.span(seeds, n)


def compute_J(algebra: HomAlgebra) -> Subspace:
    """
    The ideal generated by all squares ``[x, x]``.

    :param algebra: A Hom-Leibniz algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :return: J.
    :rtype: homleibniz.linalg.subspace.Subspace
    :raises JNotLeftCentralError: If ``[L, J] != 0``; the witness is a nonzero product.
    """
    j_ideal = ideal_closure(algebra, square_generators(algebra))
    offending = first_nonzero_product(algebra, Subspace.full(algebra.dim), j_ideal)
    if offending is not None:
        raise JNotLeftCentralError(
            f"[L, J] ≠ 0 in {algebra.name}: found the nonzero product "
            f"{algebra.describe(offending)}.",
            witness=offending,
        )
    logger.debug("J has dimension %d in %s.", j_ideal.dim, algebra.name)
    return j_ideal


def _two_sided_kernel(algebra: HomAlgebra, tests: Iterable[Sequence]) -> Subspace:
    rows: list[Vector] = []
    for t in tests:
        rows.extend(algebra.right_multiplication(t).rows)
        rows.extend(algebra.left_multiplication(t).rows)
    return kernel(Matrix(rows=tuple(rows), ncols=algebra.dim))


def annihilator(algebra: HomAlgebra) -> Subspace:
    """``Z(L) = {x : [x, L] + [L, x] = 0}``."""
    return _two_sided_kernel(
        algebra, (algebra.basis_vector(j) for j in range(algebra.dim))
    )


def lie_annihilator(
    algebra: HomAlgebra, decomposition: SplitDecomposition, js: JSplit
) -> Subspace:
    """
    Elements killed on both sides by ``H`` and the root spaces of non-J roots.

    :param algebra: The algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param decomposition: Split decomposition of ``algebra``.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param js: Root classification relative to J.
    :type js: homleibniz.diagnostics.jsplit.JSplit
    :return: ``Z_Lie(L)``; always contains ``annihilator(algebra)``.
    :rtype: homleibniz.linalg.subspace.Subspace
    """
    tests: list[Vector] = list(decomposition.H.basis)
    for root in js.lambda_notJ:
        tests.extend(decomposition.space(root).basis)
    return _two_sided_kernel(algebra, tests)


def derived(algebra: HomAlgebra) -> Subspace:
    """``[L, L]``: the span of all structure vectors."""
    return Subspace.span(
        (entry for row in algebra.structure for entry in row), algebra.dim
    )
