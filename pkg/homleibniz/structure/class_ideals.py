"""
Ideals attached to connection classes and the decomposition ``L = U + Σ I_[α]``.

Every postcondition here follows from the structure theory of split regular
Hom-Leibniz algebras with a symmetric root system. A violation on concrete
data raises ``InternalInconsistencyError`` instead of being reported.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterable, Sequence

from homleibniz.algebra.ideals import (
    annihilator,
    derived,
    first_nonzero_product,
    is_ideal,
    product,
)
from homleibniz.algebra.identities import IdentityReport, failed, not_applicable, passed
from homleibniz.algebra.model import HomAlgebra
from homleibniz.connections.connections import (
    HypothesisMissingError,
    RootPartition,
    connection_classes,
)
from homleibniz.errors import HomLeibnizError, InternalInconsistencyError
from homleibniz.linalg.subspace import Subspace, sum_all
from homleibniz.roots.decomposition import Root, SplitDecomposition, is_symmetric

logger = logging.getLogger(__name__)


class NotAClassError(HomLeibnizError, ValueError):
    """Raised when a root set is not one of the computed connection classes."""


@dataclass(frozen=True)
class IdealSummand:
    """``I_[α] = I_{0,[α]} ⊕ V_[α]`` for one connection class."""

    class_roots: tuple[Root, ...]
    I0: Subspace
    V: Subspace
    I: Subspace


@dataclass(frozen=True)
class DirectSumCheck:
    holds: bool
    reason: str


@dataclass(frozen=True)
class GlobalDecomposition:
    """``L = U + Σ I_[α]`` with ``U`` a complement of ``Σ [L_α, L_-α]`` in H."""

    U: Subspace
    summands: tuple[IdealSummand, ...]
    direct: bool
    direct_reason: str = ""


def bracket_span(decomposition: SplitDecomposition, roots: Iterable[Root]) -> Subspace:
    """``span{[L_β, L_-β] : β}`` over the roots whose negative is also a root."""
    algebra = decomposition.algebra
    return sum_all(
        (
            product(algebra, decomposition.space(root), decomposition.space(-root))
            for root in roots
            if decomposition.is_root(-root)
        ),
        algebra.dim,
    )


def root_span(decomposition: SplitDecomposition, roots: Iterable[Root]) -> Subspace:
    """``⊕ L_β`` over the given roots."""
    return sum_all(
        (decomposition.space(root) for root in roots), decomposition.algebra.dim
    )


def build_class_ideal(
    decomposition: SplitDecomposition,
    class_roots: Iterable[Root],
    partition: RootPartition | None = None,
) -> IdealSummand:
    """
    Build the ideal attached to one connection class.

    :param decomposition: The decomposition.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param class_roots: A connection class.
    :type class_roots: collections.abc.Iterable[homleibniz.roots.decomposition.Root]
    :param partition: Classes when already computed.
    :type partition: homleibniz.connections.connections.RootPartition | None
    :return: The summand ``I_[α]``.
    :rtype: IdealSummand
    :raises NotAClassError: If ``class_roots`` is not a computed class.
    :raises InternalInconsistencyError: If the result is not a phi-stable ideal.
    """
    members = tuple(sorted(set(class_roots)))
    if partition is None:
        partition = connection_classes(decomposition)
    if members not in partition.classes:
        raise NotAClassError(
            "{" + ", ".join(str(r) for r in members) + "} is not a connection class.",
            witness=members,
        )
    i0 = bracket_span(decomposition, members)
    v = root_span(decomposition, members)
    ideal = i0 + v
    algebra = decomposition.algebra
    if not is_ideal(algebra, ideal):
        raise InternalInconsistencyError(
            f"I_[{members[0]}] = {algebra.describe_span(ideal)} is not an ideal.", witness=ideal
        )
    logger.debug("I_[%s] has dimension %d.", members[0], ideal.dim)
    return IdealSummand(class_roots=members, I0=i0, V=v, I=ideal)


def check_pairwise_zero(algebra: HomAlgebra, summands: Sequence[IdealSummand]) -> IdentityReport:
    """``[I_[α], I_[β]] = 0`` for every pair of distinct summands, in both orders."""
    name = "pairwise products vanish"
    for p, first in enumerate(summands):
        for q, second in enumerate(summands):
            if p == q:
                continue
            value = first_nonzero_product(algebra, first.I, second.I)
            if value is not None:
                return failed(
                    name,
                    (p, q),
                    value,
                    f"[I_[{first.class_roots[0]}], I_[{second.class_roots[0]}]] "
                    f"contains {algebra.describe(value)}",
                )
    return passed(name)


def check_direct_sum(
    algebra: HomAlgebra, decomposition: SplitDecomposition, g: GlobalDecomposition
) -> DirectSumCheck:
    """
    Decide whether ``L = ⊕ I_[α]``, but only when ``[L, L] = L`` and ``Z(L) = 0``.

    Outside those hypotheses nothing is claimed and the check returns false.
    """
    n = algebra.dim
    if not derived(algebra).is_full:
        return DirectSumCheck(False, "hypotheses not met: [L, L] ≠ L")
    if not annihilator(algebra).is_zero:
        return DirectSumCheck(False, "hypotheses not met: Z(L) ≠ 0")
    total = sum_all((s.I for s in g.summands), n)
    if not total.is_full:
        return DirectSumCheck(False, "Σ I_[α] ≠ L")
    if sum(s.I.dim for s in g.summands) != n:
        return DirectSumCheck(False, "the sum of class ideals is not direct")
    return DirectSumCheck(True, "L = ⊕ I_[α]")


def global_decomposition(
    decomposition: SplitDecomposition, partition: RootPartition | None = None
) -> GlobalDecomposition:
    """
    Build ``U`` and every class ideal, and confirm ``U + Σ I_[α] = L``.

    ``U`` extends ``Σ [L_α, L_-α]`` by H's RREF basis vectors in order.

    :param decomposition: Decomposition with a symmetric root system.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param partition: Connection classes when already computed.
    :type partition: homleibniz.connections.connections.RootPartition | None
    :return: The decomposition together with its directness verdict.
    :rtype: GlobalDecomposition
    :raises HypothesisMissingError: If Λ is not symmetric.
    :raises InternalInconsistencyError: If ``U + Σ I_[α] ≠ L``.
    """
    if not is_symmetric(decomposition):
        raise HypothesisMissingError("Λ symmetric")
    algebra = decomposition.algebra
    if partition is None:
        partition = connection_classes(decomposition)
    summands = tuple(
        build_class_ideal(decomposition, cls, partition) for cls in partition.classes
    )
    generated = bracket_span(decomposition, decomposition.roots)
    complement = generated.complement_from(decomposition.H.basis)
    total = sum_all((complement, *(s.I for s in summands)), algebra.dim)
    if not total.is_full:
        raise InternalInconsistencyError(
            f"U + Σ I_[α] = {algebra.describe_span(total)} ≠ L.", witness=total
        )
    partial = GlobalDecomposition(U=complement, summands=summands, direct=False)
    check = check_direct_sum(algebra, decomposition, partial)
    return GlobalDecomposition(
        U=complement, summands=summands, direct=check.holds, direct_reason=check.reason
    )


def check_simple_necessary(
    algebra: HomAlgebra, decomposition: SplitDecomposition
) -> IdentityReport:
    """
    Necessary conditions for simplicity: at most one connection class and ``H = Σ [L_α, L_-α]``.

    A failure carries a root vector outside the first class ideal, or a
    vector of H outside the bracket span.
    """
    name = "simple necessary"
    if not is_symmetric(decomposition):
        return not_applicable(name, "hypotheses not met: Λ symmetric")
    partition = connection_classes(decomposition)
    if len(partition) > 1:
        stray = partition.classes[1][0]
        return failed(
            name,
            (decomposition.index_of(stray),),
            decomposition.space(stray).basis[0],
            f"{len(partition)} connection classes",
        )
    generated = bracket_span(decomposition, decomposition.roots)
    for h in decomposition.H.basis:
        residual = generated.reduce(h)
        if any(residual):
            return failed(
                name,
                (),
                residual,
                f"H ≠ Σ [L_α, L_-α]: {algebra.describe(h)} is missing",
            )
    return passed(name, "one connection class and H = Σ [L_α, L_-α]")
