"""Weight spaces of the semidirect Hom-Lie algebra relative to an embedded copy of H."""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from enum import StrEnum

from homleibniz.algebra.constructions import QuotientByJ, semidirect_product
from homleibniz.algebra.ideals import compute_J
from homleibniz.linalg.eigen import simultaneous_eigenspaces
from homleibniz.linalg.matrix import SingularMatrixError, Vector, zero_vector
from homleibniz.roots.decomposition import Root, SplitDecomposition

logger = logging.getLogger(__name__)


class HEmbedding(StrEnum):
    """How H is placed inside ``L ⋊ L/J``."""

    QUOTIENT = "quotient"
    DIAGONAL = "diagonal"


@dataclass(frozen=True)
class WeightEntry:
    weight: Root
    expected_dim: int
    actual_dim: int

    @property
    def matches(self) -> bool:
        return self.expected_dim == self.actual_dim


@dataclass(frozen=True)
class SemidirectWeightReport:
    """Comparison of observed weight spaces with ``L_λ ⊕ L_λ/(L_λ ∩ J)``."""

    embedding: HEmbedding
    entries: tuple[WeightEntry, ...]
    unexpected: tuple[Root, ...]
    covered: bool
    message: str = ""

    @property
    def holds(self) -> bool:
        return self.covered and not self.unexpected and all(e.matches for e in self.entries)


def check_semidirect_weights(
    decomposition: SplitDecomposition, embedding: HEmbedding | str = HEmbedding.QUOTIENT
) -> SemidirectWeightReport:
    """
    Decompose ``L ⋊ L/J`` under the chosen copy of H and compare dimensions.

    ``quotient`` embeds ``h`` as ``(0, h + J)``; ``diagonal`` as ``(h, h + J)``.
    Mismatches are recorded in the report, never raised.

    :param decomposition: Split decomposition of the source algebra.
    :type decomposition: homleibniz.roots.decomposition.SplitDecomposition
    :param embedding: Which copy of H to use.
    :type embedding: HEmbedding | str
    :return: Per-weight expected and observed dimensions.
    :rtype: SemidirectWeightReport
    """
    embedding = HEmbedding(embedding)
    algebra = decomposition.algebra
    n = algebra.dim
    j_ideal = compute_J(algebra)
    quotient = QuotientByJ(j_ideal)
    semidirect = semidirect_product(algebra, j_ideal)
    total = semidirect.dim

    embedded: list[Vector] = []
    for h in decomposition.h_basis:
        first = tuple(h) if embedding is HEmbedding.DIAGONAL else zero_vector(n)
        embedded.append(first + quotient.project(h))

    try:
        operators = [
            semidirect.phi_inverse @ semidirect.right_multiplication(h) for h in embedded
        ]
    except SingularMatrixError:
        return SemidirectWeightReport(
            embedding=embedding,
            entries=(),
            unexpected=(),
            covered=False,
            message="the semidirect twist is not invertible",
        )
    pieces = simultaneous_eigenspaces(operators, total)
    observed = {Root(values=values): piece.dim for values, piece in pieces}

    entries: list[WeightEntry] = []
    for weight in (decomposition.zero_root, *decomposition.roots):
        space = decomposition.space(weight)
        expected = 2 * space.dim - space.intersect(j_ideal).dim
        entries.append(
            WeightEntry(weight=weight, expected_dim=expected, actual_dim=observed.get(weight, 0))
        )
    known = {entry.weight for entry in entries}
    unexpected = tuple(sorted(w for w in observed if w not in known))
    covered = sum(observed.values()) == total
    report = SemidirectWeightReport(
        embedding=embedding,
        entries=tuple(entries),
        unexpected=unexpected,
        covered=covered,
    )
    message = (
        "weight spaces match L_λ ⊕ L_λ/(L_λ ∩ J)"
        if report.holds
        else "weight spaces differ from L_λ ⊕ L_λ/(L_λ ∩ J)"
    )
    logger.debug("Semidirect weights under %s embedding: %s.", embedding.value, message)
    return replace(report, message=message)
