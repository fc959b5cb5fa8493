"""Root-multiplicativity, evaluated in the literal and in the swapped bracket order."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from homleibniz.algebra.ideals import first_nonzero_product
from homleibniz.algebra.identities import IdentityReport, failed, passed
from homleibniz.algebra.model import HomAlgebra
from homleibniz.connections.connections import HypothesisMissingError
from homleibniz.diagnostics.jsplit import JSplit, check_maximal_length
from homleibniz.linalg.matrix import Vector
from homleibniz.roots.decomposition import Root, SplitDecomposition, root_phi_pow

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MultiplicativityInstance:
    """
    One tested pair.

    ``condition`` 1 pairs two roots of ``Λ^¬J``; ``condition`` 2 pairs
    ``α ∈ Λ^¬J`` with ``γ ∈ Λ^J``. ``literal`` records ``[L_α, L_other] ≠ 0``
    and ``swapped`` records ``[L_other, L_α] ≠ 0``. ``sample`` spans ``L_α``.
    """

    condition: int
    alpha: Root
    other: Root
    target: Root
    literal: bool
    swapped: bool
    sample: Vector

    @property
    def holds(self) -> bool:
        return self.literal if self.condition == 1 else self.swapped


@dataclass(frozen=True)
class RootMultiplicativity:
    instances: tuple[MultiplicativityInstance, ...]

    @property
    def holds(self) -> bool:
        """Verdict with the second condition read as ``[L_γ, L_α] ≠ 0``."""
        return all(instance.holds for instance in self.instances)

    @property
    def literal_holds(self) -> bool:
        return all(instance.literal for instance in self.instances)

    @property
    def readings_disagree(self) -> bool:
        return self.holds != self.literal_holds

    @property
    def report(self) -> IdentityReport:
        name = "root-multiplicative"
        for position, instance in enumerate(self.instances):
            if not instance.holds:
                return failed(
                    name,
                    (position,),
                    instance.sample,
                    f"condition {instance.condition} fails for ({instance.alpha}, "
                    f"{instance.other}) with target {instance.target}",
                    note="vanishing product",
                )
        message = f"{len(self.instances)} instances hold"
        if self.readings_disagree:
            message += "; the literal order of the second condition fails"
        return passed(name, message)


def check_root_multiplicative(
    algebra: HomAlgebra, decomposition: SplitDecomposition, js: JSplit
) -> RootMultiplicativity:
    """
    Enumerate every instance of both root-multiplicativity conditions.

    :param algebra: The algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param decomposition: A decomposition of maximal length.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param js: Root classification relative to J.
    :type js: homleibniz.diagnostics.jsplit.JSplit
    :return: Every instance with both bracket orders evaluated.
    :rtype: RootMultiplicativity
    :raises HypothesisMissingError: If some root space has dimension other than one.
    """
    if not check_maximal_length(decomposition):
        raise HypothesisMissingError("maximal length")

    def nonzero(left: Root, right: Root) -> bool:
        return (
            first_nonzero_product(
                algebra, decomposition.space(left), decomposition.space(right)
            )
            is not None
        )

    def shifted_sum(left: Root, right: Root) -> Root:
        return root_phi_pow(decomposition, left, 1) + root_phi_pow(decomposition, right, 1)

    instances: list[MultiplicativityInstance] = []
    for alpha in js.lambda_notJ:
        for beta in js.lambda_notJ:
            target = shifted_sum(alpha, beta)
            if decomposition.is_root(target):
                instances.append(
                    MultiplicativityInstance(
                        1,
                        alpha,
                        beta,
                        target,
                        nonzero(alpha, beta),
                        nonzero(beta, alpha),
                        decomposition.space(alpha).basis[0],
                    )
                )
    for alpha in js.lambda_notJ:
        for gamma in js.lambda_J:
            target = shifted_sum(alpha, gamma)
            if target in js.lambda_J:
                instances.append(
                    MultiplicativityInstance(
                        2,
                        alpha,
                        gamma,
                        target,
                        nonzero(alpha, gamma),
                        nonzero(gamma, alpha),
                        decomposition.space(alpha).basis[0],
                    )
                )
    result = RootMultiplicativity(instances=tuple(instances))
    logger.debug(
        "Root-multiplicativity: %d instances, swapped=%s, literal=%s.",
        len(instances),
        result.holds,
        result.literal_holds,
    )
    return result
