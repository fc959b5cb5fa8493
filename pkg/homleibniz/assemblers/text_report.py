"""Plain-text sections of an analysis, one renderer per CLI command."""

from __future__ import annotations

from typing import Iterable, List

from homleibniz.algebra.identities import IdentityReport
from homleibniz.app.pipeline import AnalysisResult, SemidirectResult
from homleibniz.connections.connections import RootPartition
from homleibniz.diagnostics.jsplit import check_maximal_length
from homleibniz.diagnostics.simplicity import SimplicityStatus
from homleibniz.roots.decomposition import Root, is_symmetric, root_orbit

CHECK = "✓"
CROSS = "✗"
NOT_APPLICABLE = "n/a"

_DISPLAY_NAMES = {"hom_leibniz": "Hom-Leibniz", "regular": "regular", "hom_lie": "Hom-Lie"}


def _mark(holds: bool) -> str:
    return CHECK if holds else CROSS


def _report_mark(report: IdentityReport) -> str:
    return _mark(report.holds) if report.applicable else NOT_APPLICABLE


def _roots(roots: Iterable[Root]) -> str:
    return "{" + ", ".join(str(r) for r in roots) + "}"


def _classes(partition: RootPartition) -> List[str]:
    return [f"  [{cls[0]}] = {_roots(cls)}" for cls in partition.classes]


def render_validity(result: AnalysisResult) -> str:
    """One line such as ``Hom-Leibniz ✓, regular ✓, Hom-Lie ✗ (witness ...)``."""
    parts = []
    for report in result.validity:
        text = f"{_DISPLAY_NAMES.get(report.name, report.name)} {_report_mark(report)}"
        if not report.holds:
            text += f" (witness {report.message})"
        parts.append(text)
    return ", ".join(parts)


def render_decomposition(result: AnalysisResult) -> str:
    decomposition = result.decomposition
    if decomposition is None:
        return f"Decomposition failed: {result.decomposition_error}"
    algebra = result.algebra
    lines = [
        f"H = {algebra.describe_span(decomposition.H)} (rank {decomposition.rank})",
        f"Roots ({len(decomposition.roots)}):",
    ]
    for root in decomposition.roots:
        lines.append(f"  L_{root} = {algebra.describe_span(decomposition.space(root))}")
    rows = "; ".join(
        " ".join(str(c) for c in row) for row in decomposition.phi_h.rows
    )
    lines.append(f"phi on H: [{rows}]")
    lines.append(f"Λ symmetric: {'yes' if is_symmetric(decomposition) else 'no'}")
    lines.append(
        f"Maximal length: {'yes' if check_maximal_length(decomposition) else 'no'}"
    )
    seen: set[Root] = set()
    for root in decomposition.roots:
        if root in seen:
            continue
        orbit = root_orbit(decomposition, root)
        seen.update(orbit)
        if len(orbit) > 1:
            lines.append(f"phi-orbit of {root}: " + " → ".join(str(r) for r in orbit))
    return "\n".join(lines)


def render_connections(result: AnalysisResult) -> str:
    if result.partition is None:
        return f"Connections not computed: {result.structure_error or 'no decomposition'}"
    lines = [f"Connection classes ({len(result.partition)}):", *_classes(result.partition)]
    if result.connections:
        lines.append("Certificates:")
    for (alpha, beta), c in sorted(result.connections.items(), key=lambda i: i[0]):
        sign = "+" if c.end_sign == 1 else "-"
        chain = ", ".join(str(r) for r in c.chain)
        lines.append(
            f"  {alpha} ~ {beta}: chain [{chain}], n = {c.start_shift}, "
            f"m = {c.end_shift}, ε = {sign}"
        )
    return "\n".join(lines)


def render_structure(result: AnalysisResult) -> str:
    structure = result.structure
    if structure is None:
        return f"Decomposition into class ideals not computed: {result.structure_error}"
    algebra = result.algebra
    lines = [f"U = {algebra.describe_span(structure.U)}"]
    for summand in structure.summands:
        lines.append(f"I_[{summand.class_roots[0]}] = {algebra.describe_span(summand.I)}")
        lines.append(f"  I_0 = {algebra.describe_span(summand.I0)}")
        lines.append(f"  V   = {algebra.describe_span(summand.V)}")
    lines.append(f"Direct sum: {'yes' if structure.direct else 'no'} ({structure.direct_reason})")
    if result.pairwise is not None:
        lines.append(f"Pairwise products vanish: {_mark(result.pairwise.holds)}")
    return "\n".join(lines)


def render_simplicity(result: AnalysisResult) -> str:
    verdict = result.verdict
    if verdict is None:
        return f"Simplicity not decided: {result.decomposition_error}"
    algebra = result.algebra
    lines: List[str] = []
    js = result.jsplit
    if js is not None:
        lines.append(f"J = {algebra.describe_span(js.J)}")
        lines.append(f"Λ^J = {_roots(js.lambda_J)}, Λ^¬J = {_roots(js.lambda_notJ)}")
        if js.mixed:
            lines.append(f"Roots meeting J partially: {_roots(js.mixed)}")
    necessary = result.simple_necessary
    if necessary is not None:
        lines.append(f"Necessary conditions: {_report_mark(necessary)} ({necessary.message})")
    if result.hypotheses is not None and verdict.status is not SimplicityStatus.NOT_SIMPLE:
        lines.append("Hypotheses:")
        for check in result.hypotheses.checks:
            detail = f" ({check.detail})" if check.detail else ""
            lines.append(f"  {_mark(check.holds)} {check.name}{detail}")
    lines.append(f"Verdict: {verdict.status.value}")
    if verdict.status is SimplicityStatus.NOT_SIMPLE:
        if verdict.witness is not None:
            lines.append(
                f"  witness: {verdict.witness_label} = {algebra.describe_span(verdict.witness)}"
            )
        else:
            lines.append(f"  reason: {verdict.witness_label}")
    for reason in verdict.reasons:
        lines.append(f"  missing: {reason}")
    for note in verdict.notes:
        lines.append(f"  note: {note}")
    if verdict.orthogonal_pair is not None:
        first, second = verdict.orthogonal_pair
        lines.append(
            f"  not prime: [I, K] + [K, I] = 0 for I = {algebra.describe_span(first)}, "
            f"K = {algebra.describe_span(second)}"
        )
    return "\n".join(lines)


def render_semidirect(semidirect: SemidirectResult) -> str:
    lines = [
        f"{semidirect.algebra.name}: dimension {semidirect.algebra.dim}",
        f"Hom-Lie {_mark(semidirect.hom_lie.holds)}"
        + ("" if semidirect.hom_lie.holds else f" (witness {semidirect.hom_lie.message})"),
    ]
    weights = semidirect.weights
    if weights is not None:
        lines.append(f"Weights ({weights.embedding.value} copy of H): {weights.message}")
        for entry in weights.entries:
            if not entry.matches:
                lines.append(
                    f"  {entry.weight}: expected {entry.expected_dim}, found {entry.actual_dim}"
                )
        if weights.unexpected:
            lines.append(f"  unexpected weights: {_roots(weights.unexpected)}")
    return "\n".join(lines)


def render_checks(checks: Iterable[IdentityReport]) -> str:
    checks = list(checks)
    failing = [c for c in checks if not c.holds]
    skipped = sum(1 for c in checks if not c.applicable)
    header = f"Checks: {len(checks) - len(failing)}/{len(checks)} hold"
    if skipped:
        header += f" ({skipped} {NOT_APPLICABLE})"
    lines = [header]
    for check in failing:
        lines.append(f"  {CROSS} {check.name}: {check.message}")
    return "\n".join(lines)


def render_report(result: AnalysisResult) -> str:
    """Every section, in pipeline order."""
    sections = [
        f"Algebra {result.algebra.name} (dimension {result.algebra.dim})",
        render_validity(result),
        render_decomposition(result),
    ]
    if result.decomposition is not None:
        sections.append(render_connections(result))
        sections.append(render_structure(result))
        sections.append(render_simplicity(result))
        if result.semidirect is not None:
            sections.append(render_semidirect(result.semidirect))
    if result.checks:
        sections.append(render_checks(result.checks))
    return "\n\n".join(sections)
