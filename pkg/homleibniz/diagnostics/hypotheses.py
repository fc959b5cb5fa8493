"""The hypothesis checklist shared by the simplicity verdict and the ideal propositions."""

from __future__ import annotations

import logging
from dataclasses import dataclass

from homleibniz.algebra.ideals import annihilator, derived, lie_annihilator
from homleibniz.algebra.model import HomAlgebra
from homleibniz.connections.connections import HypothesisMissingError
from homleibniz.connections.nj import nj_classes
from homleibniz.diagnostics.jsplit import JSplit, Side, check_H_generated, check_maximal_length
from homleibniz.diagnostics.multiplicativity import (
    RootMultiplicativity,
    check_root_multiplicative,
)
from homleibniz.diagnostics.sub_ideals import sub_ideals_of_J
from homleibniz.roots.decomposition import SplitDecomposition, is_symmetric

logger = logging.getLogger(__name__)

MAXIMAL_LENGTH = "maximal length"
PERFECT = "[L, L] = L"
CENTER_ZERO = "Z(L) = 0"
LIE_CENTER_ZERO = "Z_Lie(L) = 0"
H_GENERATED = "H = Σ [L_α, L_-α] over Λ^¬J"
ROOT_MULTIPLICATIVE = "root-multiplicative"
NOTJ_SYMMETRIC = "Λ^¬J symmetric"
J_SYMMETRIC = "Λ^J symmetric"
NOTJ_CONNECTED = "Λ^¬J ¬J-connected"
J_CONNECTED = "Λ^J ¬J-connected"
J_MINIMAL = "Λ^J is the only minimal closed set"


@dataclass(frozen=True)
class HypothesisCheck:
    name: str
    holds: bool
    detail: str = ""


@dataclass(frozen=True)
class Hypotheses:
    checks: tuple[HypothesisCheck, ...]
    multiplicativity: RootMultiplicativity | None = None

    def holds(self, *names: str) -> bool:
        by_name = {check.name: check.holds for check in self.checks}
        return all(by_name[name] for name in names)

    @property
    def failures(self) -> tuple[HypothesisCheck, ...]:
        return tuple(check for check in self.checks if not check.holds)


def _single_class(decomposition: SplitDecomposition, js: JSplit, side: Side) -> HypothesisCheck:
    name = J_CONNECTED if side is Side.J else NOTJ_CONNECTED
    try:
        partition = nj_classes(decomposition, js, side)
    except HypothesisMissingError as exc:
        return HypothesisCheck(name, False, f"not evaluated: {exc.hypothesis} fails")
    return HypothesisCheck(name, len(partition) <= 1, f"{len(partition)} ¬J-classes")


def evaluate_hypotheses(
    algebra: HomAlgebra, decomposition: SplitDecomposition, js: JSplit
) -> Hypotheses:
    """
    Evaluate every hypothesis used by the ideal propositions and the simplicity theorem.

    A hypothesis that cannot be evaluated because another one fails is
    recorded as failing, with the reason in its detail.

    :param algebra: The algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param decomposition: Its split decomposition.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param js: Root classification relative to J.
    :type js: homleibniz.diagnostics.jsplit.JSplit
    :return: The checklist, in a fixed order.
    :rtype: Hypotheses
    """
    n = algebra.dim
    maximal = check_maximal_length(decomposition)
    center_zero = annihilator(algebra).is_zero
    checks = [
        HypothesisCheck(MAXIMAL_LENGTH, maximal),
        HypothesisCheck(PERFECT, derived(algebra).dim == n),
        HypothesisCheck(CENTER_ZERO, center_zero),
        HypothesisCheck(LIE_CENTER_ZERO, lie_annihilator(algebra, decomposition, js).is_zero),
        HypothesisCheck(H_GENERATED, check_H_generated(algebra, decomposition, js)),
    ]
    multiplicativity: RootMultiplicativity | None = None
    if maximal:
        multiplicativity = check_root_multiplicative(algebra, decomposition, js)
        detail = multiplicativity.report.message
        checks.append(HypothesisCheck(ROOT_MULTIPLICATIVE, multiplicativity.holds, detail))
    else:
        checks.append(
            HypothesisCheck(ROOT_MULTIPLICATIVE, False, "not evaluated: maximal length fails")
        )
    checks.append(HypothesisCheck(NOTJ_SYMMETRIC, is_symmetric(decomposition, js.lambda_notJ)))
    checks.append(HypothesisCheck(J_SYMMETRIC, is_symmetric(decomposition, js.lambda_J)))
    checks.append(_single_class(decomposition, js, Side.NOT_J))
    checks.append(_single_class(decomposition, js, Side.J))
    if maximal and center_zero:
        minimal = sub_ideals_of_J(algebra, decomposition, js)
        expected = [tuple(sorted(js.lambda_J))] if js.lambda_J else []
        checks.append(
            HypothesisCheck(J_MINIMAL, minimal == expected, f"{len(minimal)} minimal closed sets")
        )
    else:
        checks.append(
            HypothesisCheck(J_MINIMAL, False, "not evaluated: needs maximal length and Z(L) = 0")
        )
    result = Hypotheses(checks=tuple(checks), multiplicativity=multiplicativity)
    logger.debug("Hypotheses failing: %s.", [check.name for check in result.failures])
    return result
