"""Instance checks: what the structure theory predicts for one concrete ideal."""

from __future__ import annotations

from typing import Iterable, Sequence

from homleibniz.algebra.ideals import is_ideal
from homleibniz.algebra.identities import IdentityReport, failed, not_applicable, passed
from homleibniz.algebra.model import HomAlgebra
from homleibniz.connections.connections import HypothesisMissingError
from homleibniz.diagnostics.hypotheses import (
    CENTER_ZERO,
    J_CONNECTED,
    J_SYMMETRIC,
    LIE_CENTER_ZERO,
    MAXIMAL_LENGTH,
    NOTJ_CONNECTED,
    NOTJ_SYMMETRIC,
    PERFECT,
    ROOT_MULTIPLICATIVE,
    Hypotheses,
    evaluate_hypotheses,
)
from homleibniz.diagnostics.jsplit import JSplit, NotAnIdealError
from homleibniz.diagnostics.sub_ideals import j_complement
from homleibniz.linalg.matrix import Vector
from homleibniz.linalg.subspace import Subspace
from homleibniz.roots.decomposition import SplitDecomposition

IN_H_VANISHES = "ideal_in_h_vanishes"
OUTSIDE_H_PLUS_J_IS_WHOLE = "ideal_outside_h_plus_j_is_whole"
OUTSIDE_J_IS_WHOLE = "ideal_outside_j_is_whole"
IN_J_SPLITS = "ideal_in_j_splits"

_REQUIREMENTS: dict[str, tuple[str, ...]] = {
    IN_H_VANISHES: (CENTER_ZERO,),
    OUTSIDE_H_PLUS_J_IS_WHOLE: (MAXIMAL_LENGTH, PERFECT, ROOT_MULTIPLICATIVE, NOTJ_CONNECTED),
    OUTSIDE_J_IS_WHOLE: (
        MAXIMAL_LENGTH,
        PERFECT,
        LIE_CENTER_ZERO,
        ROOT_MULTIPLICATIVE,
        NOTJ_CONNECTED,
    ),
    IN_J_SPLITS: (
        MAXIMAL_LENGTH,
        PERFECT,
        CENTER_ZERO,
        ROOT_MULTIPLICATIVE,
        NOTJ_SYMMETRIC,
        J_SYMMETRIC,
        J_CONNECTED,
    ),
}


def _outside(space: Subspace, candidates: Iterable[Sequence]) -> Vector:
    for candidate in candidates:
        residual = space.reduce(candidate)
        if any(residual):
            return residual
    raise ValueError("every candidate lies in the subspace")


def _skips(name: str, hypotheses: Hypotheses, applies: bool) -> bool:
    return not applies or not hypotheses.holds(*_REQUIREMENTS[name])


def check_ideal_propositions(
    algebra: HomAlgebra,
    decomposition: SplitDecomposition,
    js: JSplit,
    ideal: Subspace,
    hypotheses: Hypotheses | None = None,
) -> list[IdentityReport]:
    """
    Check every conclusion the structure theory draws about one ideal.

    Four reports are returned in a fixed order: an ideal inside H vanishes;
    an ideal outside ``H ⊕ J`` is L; an ideal outside J is L; a nonzero
    ideal inside J is J or has a complementary ideal ``K`` with
    ``J = I ⊕ K``. A report whose hypotheses fail, or whose premise does not
    apply to ``ideal``, is marked not applicable with the message
    ``hypotheses not met``.

    :param algebra: The algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param decomposition: Its split decomposition.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param js: Root classification relative to J.
    :type js: homleibniz.diagnostics.jsplit.JSplit
    :param ideal: An ideal of ``algebra``.
    :type ideal: homleibniz.linalg.subspace.Subspace
    :param hypotheses: Checklist when already evaluated.
    :type hypotheses: homleibniz.diagnostics.hypotheses.Hypotheses | None
    :return: One report per proposition.
    :rtype: list[homleibniz.algebra.identities.IdentityReport]
    :raises NotAnIdealError: If ``ideal`` is not an ideal.
    """
    if not is_ideal(algebra, ideal):
        raise NotAnIdealError(
            f"{algebra.describe_span(ideal)} is not an ideal of {algebra.name}.", witness=ideal
        )
    if hypotheses is None:
        hypotheses = evaluate_hypotheses(algebra, decomposition, js)
    n = algebra.dim
    whole = Subspace.full(n)
    standard = [algebra.basis_vector(i) for i in range(n)]
    skipped = "hypotheses not met"
    reports: list[IdentityReport] = []

    name = IN_H_VANISHES
    if _skips(name, hypotheses, decomposition.H.contains(ideal)):
        reports.append(not_applicable(name, skipped))
    elif ideal.is_zero:
        reports.append(passed(name, "I ⊆ H forces I = 0"))
    else:
        reports.append(failed(name, (), ideal.basis[0], "a nonzero ideal lies inside H"))

    for name, barrier in (
        (OUTSIDE_H_PLUS_J_IS_WHOLE, decomposition.H + js.J),
        (OUTSIDE_J_IS_WHOLE, js.J),
    ):
        if _skips(name, hypotheses, not barrier.contains(ideal)):
            reports.append(not_applicable(name, skipped))
        elif ideal == whole:
            reports.append(passed(name, "I = L"))
        else:
            reports.append(
                failed(name, (), _outside(ideal, standard), "the ideal is proper")
            )

    name = IN_J_SPLITS
    applies = not ideal.is_zero and js.J.contains(ideal)
    if _skips(name, hypotheses, applies):
        reports.append(not_applicable(name, skipped))
    elif ideal == js.J:
        reports.append(passed(name, "I = J"))
    else:
        try:
            complement = j_complement(decomposition, js, ideal)
        except HypothesisMissingError as exc:
            reports.append(
                failed(
                    name,
                    (),
                    _outside(ideal, js.J.basis),
                    f"I ≠ J and no complement exists: {exc}",
                )
            )
        else:
            total = ideal + complement.K
            if not complement.splits:
                residual = (
                    _outside(total, js.J.basis)
                    if total != js.J
                    else ideal.intersect(complement.K).basis[0]
                )
                reports.append(failed(name, (), residual, "J ≠ I ⊕ K"))
            elif not is_ideal(algebra, complement.K):
                reports.append(
                    failed(name, (), complement.K.basis[0], "K is not an ideal")
                )
            else:
                reports.append(passed(name, "J = I ⊕ K"))
    return reports
