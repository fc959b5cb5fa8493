"""Application pipeline orchestration for homleibniz analyses."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from pathlib import Path

from homleibniz.algebra.constructions import semidirect_product, yau_twist
from homleibniz.algebra.ideals import JNotLeftCentralError, compute_J
from homleibniz.algebra.identities import (
    IdentityReport,
    check_hom_leibniz,
    check_hom_lie,
    check_regular,
    failed,
    passed,
)
from homleibniz.algebra.model import HomAlgebra
from homleibniz.config.models import DEFAULT_SEPARATING_MAX_MULTIPLIER
from homleibniz.connections.connections import (
    Connection,
    HypothesisMissingError,
    RootPartition,
    connected,
    connection_classes,
    connection_table,
    shift_connection,
    verify_connection,
)
from homleibniz.connections.nj import nj_connected, nj_classes, verify_nj_connection
from homleibniz.diagnostics.hypotheses import Hypotheses, evaluate_hypotheses
from homleibniz.diagnostics.jsplit import (
    JSplit,
    Side,
    check_ideal_homogeneous,
    check_J_products_vanish,
    split_roots_by_J,
)
from homleibniz.diagnostics.propositions import check_ideal_propositions
from homleibniz.diagnostics.simplicity import (
    SimplicityStatus,
    SimplicityVerdict,
    decide_simplicity,
    probe_ideals,
)
from homleibniz.errors import InternalInconsistencyError
from homleibniz.linalg.matrix import Vector
from homleibniz.linalg.subspace import Subspace
from homleibniz.loaders.algebra_loader import ParsedAlgebra, load_psi, parse_algebra, write_algebra
from homleibniz.roots.decomposition import (
    DecompositionError,
    Root,
    SplitDecomposition,
    decompose,
    find_separating_element,
    is_symmetric,
    root_orbit,
    verify_split,
)
from homleibniz.roots.semidirect_weights import (
    HEmbedding,
    SemidirectWeightReport,
    check_semidirect_weights,
)
from homleibniz.structure.class_ideals import (
    GlobalDecomposition,
    check_pairwise_zero,
    check_simple_necessary,
    global_decomposition,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SemidirectResult:
    algebra: HomAlgebra
    hom_lie: IdentityReport
    weights: SemidirectWeightReport | None = None


@dataclass
class AnalysisResult:
    """Everything computed for one algebra; stages after a failure stay ``None``."""

    algebra: HomAlgebra
    h_basis: tuple[Vector, ...]
    validity: list[IdentityReport]
    j_ideal: Subspace | None = None
    j_error: str | None = None
    decomposition: SplitDecomposition | None = None
    decomposition_error: DecompositionError | None = None
    split_checks: list[IdentityReport] = field(default_factory=list)
    partition: RootPartition | None = None
    connections: dict[tuple[Root, Root], Connection] = field(default_factory=dict)
    structure: GlobalDecomposition | None = None
    structure_error: str | None = None
    pairwise: IdentityReport | None = None
    simple_necessary: IdentityReport | None = None
    jsplit: JSplit | None = None
    nj_partitions: dict[Side, RootPartition] = field(default_factory=dict)
    nj_errors: dict[Side, str] = field(default_factory=dict)
    hypotheses: Hypotheses | None = None
    verdict: SimplicityVerdict | None = None
    semidirect: SemidirectResult | None = None
    checks: list[IdentityReport] = field(default_factory=list)

    @property
    def checks_hold(self) -> bool:
        return all(report.holds for report in self.checks)


def validate_algebra(algebra: HomAlgebra) -> list[IdentityReport]:
    """The three identity reports in display order: Hom-Leibniz, regular, Hom-Lie."""
    return [check_hom_leibniz(algebra), check_regular(algebra), check_hom_lie(algebra)]


def build_semidirect(
    algebra: HomAlgebra,
    decomposition: SplitDecomposition | None = None,
    embedding: HEmbedding | str = HEmbedding.QUOTIENT,
) -> SemidirectResult:
    """
    Build ``L ⋊ L/J`` and check it is Hom-Lie.

    The weight-space comparison runs only when a decomposition is supplied.

    :raises JNotLeftCentralError: If J cannot be computed.
    """
    semidirect = semidirect_product(algebra)
    weights = None
    if decomposition is not None:
        weights = check_semidirect_weights(decomposition, embedding)
    return SemidirectResult(
        algebra=semidirect, hom_lie=check_hom_lie(semidirect), weights=weights
    )


def analyse_parsed(
    parsed: ParsedAlgebra,
    *,
    check_all: bool = False,
    max_multiplier: int = DEFAULT_SEPARATING_MAX_MULTIPLIER,
    embedding: HEmbedding | str = HEmbedding.QUOTIENT,
) -> AnalysisResult:
    """
    Run every analysis stage on a parsed algebra.

    A decomposition failure is recorded on the result, not raised.

    :param parsed: Algebra and H basis.
    :type parsed: homleibniz.loaders.algebra_loader.ParsedAlgebra
    :param check_all: Also run every structural verifier into ``checks``.
    :type check_all: bool
    :param max_multiplier: Search bound for separating elements.
    :type max_multiplier: int
    :param embedding: Copy of H used for the semidirect weight check.
    :type embedding: homleibniz.roots.semidirect_weights.HEmbedding | str
    :return: The analysis.
    :rtype: AnalysisResult
    """
    algebra = parsed.algebra
    result = AnalysisResult(
        algebra=algebra, h_basis=parsed.h_basis, validity=validate_algebra(algebra)
    )
    try:
        result.j_ideal = compute_J(algebra)
    except JNotLeftCentralError as exc:
        result.j_error = str(exc)

    try:
        decomposition = decompose(algebra, parsed.h_basis)
    except DecompositionError as exc:
        logger.debug("Decomposition of %s failed: %s", algebra.name, exc)
        result.decomposition_error = exc
        return result
    result.decomposition = decomposition
    result.split_checks = verify_split(decomposition)

    if is_symmetric(decomposition):
        result.partition = connection_classes(decomposition)
        result.connections = connection_table(decomposition)
        result.structure = global_decomposition(decomposition, result.partition)
        result.pairwise = check_pairwise_zero(algebra, result.structure.summands)
    else:
        result.structure_error = "Λ is not symmetric"
    result.simple_necessary = check_simple_necessary(algebra, decomposition)

    result.jsplit = split_roots_by_J(algebra, decomposition, result.j_ideal)
    for side in Side:
        try:
            result.nj_partitions[side] = nj_classes(decomposition, result.jsplit, side)
        except HypothesisMissingError as exc:
            result.nj_errors[side] = exc.hypothesis
    result.hypotheses = evaluate_hypotheses(algebra, decomposition, result.jsplit)
    result.verdict = decide_simplicity(algebra, decomposition)
    result.semidirect = build_semidirect(algebra, decomposition, embedding)

    if check_all:
        result.checks = run_checks(result, max_multiplier=max_multiplier)
    return result


def analyse(path: str | Path, **options) -> AnalysisResult:
    """Parse ``path`` and run ``analyse_parsed`` on it."""
    return analyse_parsed(parse_algebra(path), **options)


def _connection_reports(result: AnalysisResult) -> list[IdentityReport]:
    decomposition = result.decomposition
    reports: list[IdentityReport] = []
    for (alpha, beta), certificate in sorted(result.connections.items(), key=lambda i: i[0]):
        name = f"connection {alpha} → {beta}"
        shifted = shift_connection(decomposition, certificate, 1)
        if not verify_connection(decomposition, alpha, beta, certificate):
            reports.append(_certificate_failure(name, certificate, "certificate does not verify"))
        elif not verify_connection(decomposition, alpha, beta, shifted):
            reports.append(_certificate_failure(name, shifted, "shifted certificate fails"))
        else:
            reports.append(passed(name, f"length {certificate.length}"))
    if result.partition is not None:
        for alpha in decomposition.roots:
            name = f"orbit of {alpha} connected"
            stray = [
                gamma
                for gamma in root_orbit(decomposition, alpha)
                if connected(decomposition, alpha, gamma) is None
            ]
            if stray:
                reports.append(
                    failed(name, (), stray[0].values, f"{alpha} is not connected to {stray[0]}")
                )
            else:
                reports.append(passed(name))
    return reports


def _certificate_failure(name: str, certificate: Connection, message: str) -> IdentityReport:
    return failed(name, (), certificate.partial_sums[-1].values, message)


def _nj_reports(result: AnalysisResult) -> list[IdentityReport]:
    decomposition, js = result.decomposition, result.jsplit
    reports: list[IdentityReport] = []
    for side, partition in result.nj_partitions.items():
        for cls in partition.classes:
            for alpha in cls:
                for beta in cls:
                    certificate = nj_connected(decomposition, js, alpha, beta)
                    name = f"¬J-connection {alpha} → {beta}"
                    if certificate is None:
                        reports.append(
                            failed(name, (), beta.values, f"no certificate on Λ^{side.value}")
                        )
                    elif not verify_nj_connection(decomposition, js, alpha, beta, certificate):
                        reports.append(
                            _certificate_failure(name, certificate, "certificate does not verify")
                        )
    if not reports:
        return [passed("¬J-connections", "every ¬J-certificate verifies")]
    return reports


def _separating_reports(result: AnalysisResult, max_multiplier: int) -> list[IdentityReport]:
    decomposition = result.decomposition
    name = "separating elements"
    for alpha in decomposition.roots:
        for beta in decomposition.roots:
            if alpha == beta:
                continue
            try:
                find_separating_element(decomposition, alpha, beta, max_multiplier)
            except InternalInconsistencyError as exc:
                return [failed(name, (), alpha.values, str(exc))]
    return [passed(name, f"found within multiplier {max_multiplier}")]


def run_checks(
    result: AnalysisResult, max_multiplier: int = DEFAULT_SEPARATING_MAX_MULTIPLIER
) -> list[IdentityReport]:
    """
    Run every structural verifier on an analysis that has a decomposition.

    :param result: An analysis with its decomposition computed.
    :type result: AnalysisResult
    :param max_multiplier: Search bound for separating elements.
    :type max_multiplier: int
    :return: Split containments, connection and ¬J certificates, orbit
        connectivity, class-ideal products, J products, homogeneity of every
        probe ideal, the ideal propositions, the semidirect Hom-Lie check and
        separating elements.
    :rtype: list[homleibniz.algebra.identities.IdentityReport]
    """
    algebra = result.algebra
    decomposition = result.decomposition
    if decomposition is None:
        return []
    js = result.jsplit
    reports = list(result.split_checks)
    reports.extend(_connection_reports(result))
    reports.extend(_nj_reports(result))
    if result.pairwise is not None:
        reports.append(result.pairwise)
    if result.simple_necessary is not None and result.verdict is not None:
        if result.verdict.status is SimplicityStatus.SIMPLE:
            reports.append(result.simple_necessary)
    reports.append(check_J_products_vanish(algebra, decomposition, js))

    seen: list[Subspace] = []
    for probe in probe_ideals(algebra, decomposition, js):
        if probe.ideal in seen:
            continue
        seen.append(probe.ideal)
        homogeneous = check_ideal_homogeneous(algebra, decomposition, probe.ideal)
        reports.append(_relabel(homogeneous, f"{probe.label} homogeneous"))
        for report in check_ideal_propositions(
            algebra, decomposition, js, probe.ideal, result.hypotheses
        ):
            reports.append(_relabel(report, f"{report.name} on {probe.label}"))

    if result.semidirect is not None:
        reports.append(result.semidirect.hom_lie)
        expected = 2 * algebra.dim - js.J.dim
        name = "semidirect dimension"
        if result.semidirect.algebra.dim == expected:
            reports.append(passed(name, f"dim = {expected}"))
        else:
            reports.append(
                failed(name, (), (), f"dim = {result.semidirect.algebra.dim}, expected {expected}")
            )
    reports.extend(_separating_reports(result, max_multiplier))
    logger.debug(
        "%d checks, %d failing.", len(reports), sum(not r.holds for r in reports)
    )
    return reports


def _relabel(report: IdentityReport, name: str) -> IdentityReport:
    return replace(report, name=name)


def twist_file(
    source: str | Path, psi_path: str | Path, out: str | Path, name: str | None = None
) -> Path:
    """
    Yau-twist the algebra in ``source`` by the matrix in ``psi_path`` and write it to ``out``.

    H is carried over unchanged; it stays abelian and phi-stable only when
    psi preserves it.

    :raises AlgebraLoadError: If either input cannot be parsed.
    :raises NotAutomorphismError: If psi is not an automorphism.
    """
    parsed = parse_algebra(source)
    psi = load_psi(psi_path, parsed.algebra.dim)
    twisted = yau_twist(parsed.algebra, psi, name=name)
    return write_algebra(twisted, out, parsed.h_basis)


def semidirect_file(source: str | Path, out: str | Path) -> tuple[Path, SemidirectResult]:
    """Write ``L ⋊ L/J`` of the algebra in ``source`` to ``out``, with an empty H."""
    parsed = parse_algebra(source)
    try:
        decomposition = decompose(parsed.algebra, parsed.h_basis)
    except DecompositionError:
        decomposition = None
    semidirect = build_semidirect(parsed.algebra, decomposition)
    return write_algebra(semidirect.algebra, out), semidirect
