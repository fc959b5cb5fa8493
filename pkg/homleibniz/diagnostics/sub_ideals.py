"""Ideals inside J, described by closed sets of roots, and the ¬J-class ideals."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Sequence

from homleibniz.algebra.ideals import annihilator, derived, is_ideal, product
from homleibniz.algebra.model import HomAlgebra
from homleibniz.connections.connections import HypothesisMissingError
from homleibniz.connections.nj import ClassMismatchError, nj_class_of
from homleibniz.diagnostics.jsplit import JSplit, Side, check_maximal_length
from homleibniz.errors import InternalInconsistencyError
from homleibniz.linalg.subspace import Subspace
from homleibniz.roots.decomposition import Root, SplitDecomposition, root_phi_pow
from homleibniz.structure.class_ideals import bracket_span, root_span

logger = logging.getLogger(__name__)


def _closure(decomposition: SplitDecomposition, js: JSplit, start: Root) -> frozenset[Root]:
    algebra = decomposition.algebra
    partners = [decomposition.zero_root, *decomposition.roots]
    members = {start}
    frontier = [start]
    while frontier:
        beta = frontier.pop()
        images = [root_phi_pow(decomposition, beta, 1)]
        for gamma in partners:
            if not product(
                algebra, decomposition.space(beta), decomposition.space(gamma)
            ).is_zero:
                images.append(
                    root_phi_pow(decomposition, beta, 1) + root_phi_pow(decomposition, gamma, 1)
                )
        for image in images:
            if image not in js.lambda_J:
                raise InternalInconsistencyError(
                    f"Closure of {start} reached {image} outside Λ^J.", witness=image
                )
            if image not in members:
                members.add(image)
                frontier.append(image)
    return frozenset(members)


def closed_root_sets(decomposition: SplitDecomposition, js: JSplit) -> list[tuple[Root, ...]]:
    """
    The distinct closures ``cl(β)`` for ``β`` in ``Λ^J``.

    ``cl(β)`` is the smallest set containing ``β`` that is stable under
    ``β -> βφ^-1`` and under ``β -> βφ^-1 + γφ^-1`` whenever
    ``[L_β, L_γ] ≠ 0`` for ``γ`` in ``Λ ∪ {0}``. Sets are sorted, smaller first.
    """
    closures = {_closure(decomposition, js, beta) for beta in js.lambda_J}
    return sorted((tuple(sorted(c)) for c in closures), key=lambda c: (len(c), c))


def _require_sub_ideal_hypotheses(algebra: HomAlgebra, decomposition: SplitDecomposition) -> None:
    if not check_maximal_length(decomposition):
        raise HypothesisMissingError("maximal length")
    if not annihilator(algebra).is_zero:
        raise HypothesisMissingError("Z(L) = 0")


def sub_ideals_of_J(
    algebra: HomAlgebra, decomposition: SplitDecomposition, js: JSplit
) -> list[tuple[Root, ...]]:
    """
    Minimal nonempty closed root sets inside ``Λ^J``.

    Under maximal length and ``Z(L) = 0`` every ideal contained in J is the
    sum of the root spaces of a union of these sets.

    :param algebra: The algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param decomposition: Its split decomposition.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param js: Root classification relative to J.
    :type js: homleibniz.diagnostics.jsplit.JSplit
    :return: The minimal closed sets, each sorted.
    :rtype: list[tuple[homleibniz.roots.decomposition.Root, ...]]
    :raises HypothesisMissingError: If maximal length or ``Z(L) = 0`` fails.
    """
    _require_sub_ideal_hypotheses(algebra, decomposition)
    candidates = closed_root_sets(decomposition, js)
    minimal = [
        c for c in candidates if not any(set(o) < set(c) for o in candidates if o != c)
    ]
    logger.debug("%d minimal closed sets inside Λ^J.", len(minimal))
    return minimal


def class_ideal_of_side(
    decomposition: SplitDecomposition, js: JSplit, alpha: Root
) -> Subspace:
    """``L_{Λ_α^γ} = span{[L_β, L_-β]} ⊕ (⊕ L_β)`` over the ¬J-class of ``α``."""
    members = nj_class_of(decomposition, js, alpha)
    return bracket_span(decomposition, members) + root_span(decomposition, members)


def class_J_ideal(
    algebra: HomAlgebra, decomposition: SplitDecomposition, js: JSplit, alpha: Root
) -> Subspace:
    """
    The ideal ``L_{Λ_α^J}`` attached to a root inside J.

    :raises ClassMismatchError: If ``alpha`` is not in ``Λ^J``.
    :raises HypothesisMissingError: If ``[L, L] ≠ L``.
    :raises InternalInconsistencyError: If the result is not an ideal.
    """
    if js.side_of(alpha) is not Side.J:
        raise ClassMismatchError(f"{alpha} is not in Λ^J.", witness=alpha)
    if not derived(algebra).is_full:
        raise HypothesisMissingError("L = [L, L]")
    ideal = class_ideal_of_side(decomposition, js, alpha)
    if not is_ideal(algebra, ideal):
        raise InternalInconsistencyError(
            f"L_Λ^J_{alpha} = {algebra.describe_span(ideal)} is not an ideal.", witness=ideal
        )
    return ideal


@dataclass(frozen=True)
class JComplement:
    """``K = ⊕ L_-α`` over the roots of an ideal ``I ⊆ J``, and whether ``J = I ⊕ K``."""

    roots: tuple[Root, ...]
    K: Subspace
    splits: bool


def j_complement(decomposition: SplitDecomposition, js: JSplit, ideal: Subspace) -> JComplement:
    """
    Build the complementary ideal of a nonzero ideal inside J.

    :param decomposition: The decomposition.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param js: Root classification relative to J.
    :type js: homleibniz.diagnostics.jsplit.JSplit
    :param ideal: A nonzero ideal contained in J.
    :type ideal: homleibniz.linalg.subspace.Subspace
    :return: ``K`` and whether J is the direct sum of ``ideal`` and ``K``.
    :rtype: JComplement
    :raises HypothesisMissingError: If ``ideal`` is zero, leaves J, or its roots contain ``±α``.
    """
    if ideal.is_zero or not js.J.contains(ideal):
        raise HypothesisMissingError("nonzero I ⊆ J")
    roots = tuple(r for r in js.lambda_J if ideal.contains(decomposition.space(r)))
    if any(-r in roots for r in roots):
        raise HypothesisMissingError("Λ^{J,I} without opposite pairs")
    k = root_span(decomposition, (-r for r in roots))
    splits = (ideal + k) == js.J and ideal.dim + k.dim == js.J.dim
    return JComplement(roots=roots, K=k, splits=splits)


def find_orthogonal_ideals(
    algebra: HomAlgebra, ideals: Sequence[Subspace], j_ideal: Subspace
) -> tuple[Subspace, Subspace] | None:
    """
    Two ideals outside ``{0, J, L}`` with ``[I, K] + [K, I] = 0``.

    Such a pair shows the algebra is not prime.
    """
    trivial = (Subspace.zero(algebra.dim), j_ideal, Subspace.full(algebra.dim))
    candidates: list[Subspace] = []
    for ideal in ideals:
        if ideal not in trivial and ideal not in candidates:
            candidates.append(ideal)
    for first, second in combinations_with_replacement(candidates, 2):
        if product(algebra, first, second).is_zero and product(algebra, second, first).is_zero:
            return first, second
    return None
