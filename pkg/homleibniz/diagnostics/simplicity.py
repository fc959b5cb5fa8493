"""
The simplicity verdict.

Refutation comes first: a fixed list of ideals is generated from root
spaces, J, the two annihilators, the class ideals and the minimal closed
subsets of ``Λ^J``. Any of them outside ``{0, J, L}`` settles the question.
Otherwise the full hypothesis checklist is evaluated; when every item
holds, every nonzero ideal is J or L and the algebra is certified simple.
Primeness is never claimed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import StrEnum

from homleibniz.algebra.ideals import annihilator, compute_J, ideal_closure, lie_annihilator
from homleibniz.algebra.model import HomAlgebra
from homleibniz.connections.connections import connection_classes
from homleibniz.diagnostics.hypotheses import Hypotheses, evaluate_hypotheses
from homleibniz.diagnostics.jsplit import JSplit, check_maximal_length, split_roots_by_J
from homleibniz.diagnostics.sub_ideals import find_orthogonal_ideals, sub_ideals_of_J
from homleibniz.linalg.subspace import Subspace, sum_all
from homleibniz.roots.decomposition import SplitDecomposition, is_symmetric
from homleibniz.structure.class_ideals import build_class_ideal, check_simple_necessary, root_span

logger = logging.getLogger(__name__)


class SimplicityStatus(StrEnum):
    SIMPLE = "Simple"
    NOT_SIMPLE = "NotSimple"
    INCONCLUSIVE = "Inconclusive"


@dataclass(frozen=True)
class Probe:
    label: str
    ideal: Subspace


@dataclass(frozen=True)
class SimplicityVerdict:
    """
    Outcome of ``decide_simplicity``.

    ``certificate`` lists the verified hypotheses of a ``Simple`` verdict,
    ``witness`` is the offending ideal of a ``NotSimple`` verdict (``None``
    when the product vanishes identically) and ``reasons`` lists the gaps of
    an ``Inconclusive`` one.
    """

    status: SimplicityStatus
    certificate: tuple[str, ...] = ()
    witness: Subspace | None = None
    witness_label: str = ""
    reasons: tuple[str, ...] = ()
    notes: tuple[str, ...] = ()
    orthogonal_pair: tuple[Subspace, Subspace] | None = None
    hypotheses: Hypotheses | None = None


def probe_ideals(
    algebra: HomAlgebra, decomposition: SplitDecomposition, js: JSplit
) -> list[Probe]:
    """The fixed, ordered list of ideals tried before any certification."""
    probes = [
        Probe(f"ideal generated by L_{root}", ideal_closure(algebra, decomposition.space(root)))
        for root in decomposition.roots
    ]
    probes.append(Probe("ideal generated by J", ideal_closure(algebra, js.J)))
    center = annihilator(algebra)
    probes.append(Probe("ideal generated by Z(L)", ideal_closure(algebra, center)))
    probes.append(
        Probe(
            "ideal generated by Z_Lie(L)",
            ideal_closure(algebra, lie_annihilator(algebra, decomposition, js)),
        )
    )
    if is_symmetric(decomposition):
        partition = connection_classes(decomposition)
        summands = [build_class_ideal(decomposition, cls, partition) for cls in partition.classes]
        probes.extend(Probe(f"I_[{s.class_roots[0]}]", s.I) for s in summands)
        probes.append(Probe("Σ I_[α]", sum_all((s.I for s in summands), algebra.dim)))
    if check_maximal_length(decomposition) and center.is_zero:
        for closed in sub_ideals_of_J(algebra, decomposition, js):
            label = "ideal generated by L_{" + ", ".join(str(r) for r in closed) + "}"
            probes.append(
                Probe(label, ideal_closure(algebra, root_span(decomposition, closed)))
            )
    return probes


def decide_simplicity(
    algebra: HomAlgebra, decomposition: SplitDecomposition
) -> SimplicityVerdict:
    """
    Decide whether ``algebra`` is simple: nonzero product and only the ideals 0, J, L.

    :param algebra: The algebra.
    :type algebra: homleibniz.algebra.model.HomAlgebra
    :param decomposition: A verified split decomposition of ``algebra``.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :return: ``Simple`` with its certificate, ``NotSimple`` with a witness
        ideal, or ``Inconclusive`` with the hypotheses that failed.
    :rtype: SimplicityVerdict
    """
    if algebra.is_zero_product:
        logger.debug("%s has zero product.", algebra.name)
        return SimplicityVerdict(
            status=SimplicityStatus.NOT_SIMPLE, witness_label="product is zero"
        )
    n = algebra.dim
    j_ideal = compute_J(algebra)
    js = split_roots_by_J(algebra, decomposition, j_ideal)
    trivial = (Subspace.zero(n), j_ideal, Subspace.full(n))

    probes = probe_ideals(algebra, decomposition, js)
    orthogonal = find_orthogonal_ideals(algebra, [p.ideal for p in probes], j_ideal)
    for probe in probes:
        if probe.ideal not in trivial:
            logger.debug("Refuted by %s.", probe.label)
            return SimplicityVerdict(
                status=SimplicityStatus.NOT_SIMPLE,
                witness=probe.ideal,
                witness_label=probe.label,
                orthogonal_pair=orthogonal,
            )

    reasons: list[str] = []
    necessary = check_simple_necessary(algebra, decomposition)
    if not necessary.holds:
        reasons.append(f"necessary conditions fail: {necessary.message}")

    hypotheses = evaluate_hypotheses(algebra, decomposition, js)
    notes: list[str] = []
    if hypotheses.multiplicativity is not None and hypotheses.multiplicativity.readings_disagree:
        notes.append(
            "root-multiplicativity holds with [L_γ, L_α] ≠ 0 but fails with [L_α, L_γ] ≠ 0"
        )
    for check in hypotheses.failures:
        reasons.append(check.name if not check.detail else f"{check.name} ({check.detail})")

    if reasons:
        return SimplicityVerdict(
            status=SimplicityStatus.INCONCLUSIVE,
            reasons=tuple(reasons),
            notes=tuple(notes),
            orthogonal_pair=orthogonal,
            hypotheses=hypotheses,
        )
    return SimplicityVerdict(
        status=SimplicityStatus.SIMPLE,
        certificate=tuple(check.name for check in hypotheses.checks),
        notes=tuple(notes),
        orthogonal_pair=orthogonal,
        hypotheses=hypotheses,
    )
