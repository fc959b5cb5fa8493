"""Classification of roots relative to J and the homogeneity checks built on it."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum

from homleibniz.algebra.ideals import compute_J, first_nonzero_product, is_ideal, product
from homleibniz.algebra.identities import IdentityReport, failed, passed
from homleibniz.algebra.model import HomAlgebra
from homleibniz.errors import HomLeibnizError
from homleibniz.linalg.matrix import is_zero_vector
from homleibniz.linalg.subspace import Subspace, sum_all
from homleibniz.roots.decomposition import Root, SplitDecomposition

logger = logging.getLogger(__name__)


class NotAnIdealError(HomLeibnizError, ValueError):
    """Raised when a subspace passed as an ideal is not closed under products and phi."""


class Side(StrEnum):
    """The two halves ``Λ^J`` and ``Λ^¬J`` of the root system."""

    J = "J"
    NOT_J = "notJ"


@dataclass(frozen=True)
class JSplit:
    """Roots with ``L_α ⊆ J``, roots with ``L_α ∩ J = 0``, and the rest."""

    J: Subspace
    lambda_J: tuple[Root, ...]
    lambda_notJ: tuple[Root, ...]
    mixed: tuple[Root, ...]
    j_cap_h: Subspace

    def roots_of(self, side: Side | str) -> tuple[Root, ...]:
        return self.lambda_J if Side(side) is Side.J else self.lambda_notJ

    def side_of(self, root: Root) -> Side | None:
        if root in self.lambda_J:
            return Side.J
        if root in self.lambda_notJ:
            return Side.NOT_J
        return None


def split_roots_by_J(
    algebra: HomAlgebra, decomposition: SplitDecomposition, j_ideal: Subspace | None = None
) -> JSplit:
    """
    Sort every root by how its root space meets J.

    :param algebra: The algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param decomposition: Its split decomposition.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param j_ideal: J when already computed.
    :type j_ideal: homleibniz.linalg.subspace.Subspace | None
    :return: The three root sets together with J and ``J ∩ H``.
    :rtype: JSplit
    """
    if j_ideal is None:
        j_ideal = compute_J(algebra)
    inside: list[Root] = []
    outside: list[Root] = []
    mixed: list[Root] = []
    for root in decomposition.roots:
        space = decomposition.space(root)
        if j_ideal.contains(space):
            inside.append(root)
        elif space.intersect(j_ideal).is_zero:
            outside.append(root)
        else:
            mixed.append(root)
    split = JSplit(
        J=j_ideal,
        lambda_J=tuple(inside),
        lambda_notJ=tuple(outside),
        mixed=tuple(mixed),
        j_cap_h=j_ideal.intersect(decomposition.H),
    )
    logger.debug(
        "Λ^J=%d, Λ^¬J=%d, mixed=%d roots.", len(inside), len(outside), len(mixed)
    )
    return split


def check_maximal_length(decomposition: SplitDecomposition) -> bool:
    """True iff every root space is one-dimensional."""
    return all(space.dim == 1 for space in decomposition.root_spaces.values())


def homogeneous_part(decomposition: SplitDecomposition, space: Subspace) -> Subspace:
    """``(I ∩ H) ⊕ (⊕ I ∩ L_α)``."""
    pieces = [space.intersect(decomposition.H)]
    pieces.extend(space.intersect(decomposition.space(root)) for root in decomposition.roots)
    return sum_all(pieces, decomposition.algebra.dim)


def check_ideal_homogeneous(
    algebra: HomAlgebra, decomposition: SplitDecomposition, ideal: Subspace
) -> IdentityReport:
    """
    Check that an ideal is the sum of its intersections with H and the root spaces.

    :param algebra: The algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param decomposition: Its split decomposition.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param ideal: An ideal of ``algebra``.
    :type ideal: homleibniz.linalg.subspace.Subspace
    :return: Report named ``homogeneous``; a failure carries a vector of the
        ideal outside its homogeneous part.
    :rtype: homleibniz.algebra.identities.IdentityReport
    :raises NotAnIdealError: If ``ideal`` is not an ideal.
    """
    if not is_ideal(algebra, ideal):
        raise NotAnIdealError(
            f"{algebra.describe_span(ideal)} is not an ideal of {algebra.name}.", witness=ideal
        )
    parts = homogeneous_part(decomposition, ideal)
    for position, v in enumerate(ideal.basis):
        residual = parts.reduce(v)
        if not is_zero_vector(residual):
            return failed(
                "homogeneous",
                (position,),
                residual,
                f"{algebra.describe(v)} is not a sum of homogeneous components",
            )
    return passed("homogeneous", "I = (I ∩ H) ⊕ (⊕ I ∩ L_α)")


def check_H_generated(
    algebra: HomAlgebra, decomposition: SplitDecomposition, js: JSplit
) -> bool:
    """True iff ``H = Σ_{α ∈ Λ^¬J} [L_α, L_-α]``."""
    generated = sum_all(
        (
            product(algebra, decomposition.space(root), decomposition.space(-root))
            for root in js.lambda_notJ
        ),
        algebra.dim,
    )
    return generated == decomposition.H


def check_J_products_vanish(
    algebra: HomAlgebra, decomposition: SplitDecomposition, js: JSplit
) -> IdentityReport:
    """``[L_α, L_γ] = 0`` for every ``α`` in ``Λ ∪ {0}`` and every ``γ`` in ``Λ^J``."""
    name = "[L_α, L_γ] = 0 for γ ∈ Λ^J"
    indexed = [decomposition.zero_root, *decomposition.roots]
    for p, alpha in enumerate(indexed):
        for gamma in js.lambda_J:
            value = first_nonzero_product(
                algebra, decomposition.space(alpha), decomposition.space(gamma)
            )
            if value is not None:
                return failed(
                    name,
                    (p, decomposition.index_of(gamma) + 1),
                    value,
                    f"[L_{alpha}, L_{gamma}] contains {algebra.describe(value)}",
                )
    return passed(name)
