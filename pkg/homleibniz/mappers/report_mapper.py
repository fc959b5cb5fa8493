"""Deterministic mapper from an analysis result to the JSON report model."""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from homleibniz.algebra.identities import IdentityReport
from homleibniz.algebra.model import HomAlgebra
from homleibniz.app.pipeline import AnalysisResult
from homleibniz.connections.connections import Connection, RootPartition
from homleibniz.diagnostics.jsplit import check_maximal_length
from homleibniz.diagnostics.simplicity import SimplicityVerdict
from homleibniz.linalg.subspace import Subspace
from homleibniz.roots.decomposition import Root, SplitDecomposition, is_symmetric, root_orbit
from homleibniz.schema.report_schema import (
    ConnectionModel,
    DecompositionModel,
    HypothesisModel,
    IdentityReportModel,
    JSplitModel,
    MultiplicativityInstanceModel,
    MultiplicativityModel,
    Report,
    RootModel,
    SemidirectModel,
    StructureModel,
    SubspaceModel,
    SummandModel,
    VectorText,
    VerdictModel,
)


def build_report(result: AnalysisResult) -> Report:
    """
    Build the report document for one analysis.

    Sections whose stage did not run are left empty. The mapping is
    deterministic: equal analyses give byte-identical JSON.

    :param result: Output of the analysis pipeline.
    :type result: homleibniz.app.pipeline.AnalysisResult
    :return: Report model ready for ``model_dump_json``.
    :rtype: homleibniz.schema.report_schema.Report
    """
    algebra = result.algebra
    report = Report(
        algebra=algebra.name,
        dim=algebra.dim,
        basis=[algebra.label(i) for i in range(algebra.dim)],
        validity=[map_identity(r) for r in result.validity],
    )
    if result.j_ideal is not None:
        report.J = map_subspace(algebra, result.j_ideal)
    if result.decomposition_error is not None:
        report.decomposition_error = str(result.decomposition_error)
    decomposition = result.decomposition
    if decomposition is None:
        return report

    report.decomposition = map_decomposition(decomposition)
    report.split_checks = [map_identity(r) for r in result.split_checks]
    if result.partition is not None:
        report.connection_classes = map_partition(result.partition)
    report.connections = [
        map_connection(alpha, beta, c)
        for (alpha, beta), c in sorted(result.connections.items(), key=lambda i: i[0])
    ]
    if result.structure is not None:
        report.structure = StructureModel(
            U=map_subspace(algebra, result.structure.U),
            summands=[
                SummandModel(
                    class_roots=[vector_text(r.values) for r in s.class_roots],
                    I0=map_subspace(algebra, s.I0),
                    V=map_subspace(algebra, s.V),
                    I=map_subspace(algebra, s.I),
                )
                for s in result.structure.summands
            ],
            direct=result.structure.direct,
            direct_reason=result.structure.direct_reason,
            pairwise=map_identity(result.pairwise),
            simple_necessary=map_identity(result.simple_necessary),
        )
    if result.jsplit is not None:
        js = result.jsplit
        report.jsplit = JSplitModel(
            J=map_subspace(algebra, js.J),
            lambda_J=[vector_text(r.values) for r in js.lambda_J],
            lambda_notJ=[vector_text(r.values) for r in js.lambda_notJ],
            mixed=[vector_text(r.values) for r in js.mixed],
            j_cap_h=map_subspace(algebra, js.j_cap_h),
            maximal_length=check_maximal_length(decomposition),
        )
        nj: Dict[str, List[List[VectorText]]] = {}
        for side, partition in sorted(result.nj_partitions.items()):
            nj[side.value] = map_partition(partition)
        report.nj_classes = nj
    if result.hypotheses is not None:
        report.hypotheses = [
            HypothesisModel(name=c.name, holds=c.holds, detail=c.detail)
            for c in result.hypotheses.checks
        ]
        multiplicativity = result.hypotheses.multiplicativity
        if multiplicativity is not None:
            report.multiplicativity = MultiplicativityModel(
                holds=multiplicativity.holds,
                literal_holds=multiplicativity.literal_holds,
                instances=[
                    MultiplicativityInstanceModel(
                        condition=i.condition,
                        alpha=vector_text(i.alpha.values),
                        other=vector_text(i.other.values),
                        target=vector_text(i.target.values),
                        literal=i.literal,
                        swapped=i.swapped,
                    )
                    for i in multiplicativity.instances
                ],
            )
    if result.verdict is not None:
        report.verdict = map_verdict(algebra, result.verdict)
    if result.semidirect is not None:
        semidirect = result.semidirect
        weights = semidirect.weights
        report.semidirect = SemidirectModel(
            dim=semidirect.algebra.dim,
            hom_lie=map_identity(semidirect.hom_lie),
            embedding=weights.embedding.value if weights is not None else "",
            weights_match=weights.holds if weights is not None else False,
            message=weights.message if weights is not None else "",
        )
    report.checks = [map_identity(r) for r in result.checks]
    return report


def rational_text(value: Fraction) -> str:
    return str(value)


def vector_text(values: Iterable[Fraction]) -> VectorText:
    return [rational_text(v) for v in values]


def map_subspace(algebra: HomAlgebra, space: Subspace) -> SubspaceModel:
    """A subspace as its canonical RREF basis plus a labelled rendering."""
    return SubspaceModel(
        dim=space.dim,
        basis=[vector_text(v) for v in space.basis],
        text=algebra.describe_span(space),
    )


def map_identity(report: Optional[IdentityReport]) -> IdentityReportModel:
    if report is None:
        return IdentityReportModel(name="", holds=True, message="not evaluated", applicable=False)
    witness = report.witness
    return IdentityReportModel(
        name=report.name,
        holds=report.holds,
        message=report.message,
        applicable=report.applicable,
        witness_indices=list(witness.indices) if witness is not None else None,
        witness_residual=vector_text(witness.residual) if witness is not None else None,
        witness_note=witness.note if witness is not None else "",
    )


def map_partition(partition: RootPartition) -> List[List[VectorText]]:
    return [[vector_text(r.values) for r in cls] for cls in partition.classes]


def _distinct_orbits(decomposition: SplitDecomposition) -> List[Sequence[Root]]:
    orbits: List[Sequence[Root]] = []
    seen: set[Root] = set()
    for root in decomposition.roots:
        if root in seen:
            continue
        orbit = root_orbit(decomposition, root)
        seen.update(orbit)
        orbits.append(orbit)
    return orbits


def map_decomposition(decomposition: SplitDecomposition) -> DecompositionModel:
    algebra = decomposition.algebra
    return DecompositionModel(
        H=map_subspace(algebra, decomposition.H),
        rank=decomposition.rank,
        roots=[
            RootModel(
                values=vector_text(root.values),
                space=map_subspace(algebra, decomposition.space(root)),
            )
            for root in decomposition.roots
        ],
        phi_h=[vector_text(row) for row in decomposition.phi_h.rows],
        symmetric=is_symmetric(decomposition),
        orbits=[
            [vector_text(r.values) for r in orbit] for orbit in _distinct_orbits(decomposition)
        ],
    )


def map_connection(alpha: Root, beta: Root, connection: Connection) -> ConnectionModel:
    return ConnectionModel(
        source=vector_text(alpha.values),
        target=vector_text(beta.values),
        chain=[vector_text(r.values) for r in connection.chain],
        partial_sums=[vector_text(r.values) for r in connection.partial_sums],
        start_shift=connection.start_shift,
        end_shift=connection.end_shift,
        end_sign=connection.end_sign,
    )


def map_verdict(algebra: HomAlgebra, verdict: SimplicityVerdict) -> VerdictModel:
    pair = None
    if verdict.orthogonal_pair is not None:
        pair = [map_subspace(algebra, ideal) for ideal in verdict.orthogonal_pair]
    return VerdictModel(
        status=verdict.status.value,
        certificate=list(verdict.certificate),
        witness=map_subspace(algebra, verdict.witness) if verdict.witness is not None else None,
        witness_label=verdict.witness_label,
        reasons=list(verdict.reasons),
        notes=list(verdict.notes),
        orthogonal_pair=pair,
    )


def report_json(report: Report, indent: int = 2) -> str:
    """Serialize a report; the output ends with a newline."""
    return report.model_dump_json(indent=indent) + "\n"


def parse_report(text: str) -> Report:
    return Report.model_validate_json(text)
