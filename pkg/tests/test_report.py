from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path

from homleibniz.algebra.identities import failed, not_applicable, passed
from homleibniz.app.pipeline import analyse
from homleibniz.assemblers.text_report import (
    render_checks,
    render_connections,
    render_decomposition,
    render_report,
    render_simplicity,
    render_validity,
)
from homleibniz.mappers.report_mapper import build_report, parse_report, report_json


def test_report_json_roundtrip_is_byte_identical(sl2v1_path: Path) -> None:
    text = report_json(build_report(analyse(sl2v1_path)))
    reparsed = parse_report(text)

    assert report_json(reparsed) == text
    assert text.endswith("\n")


def test_report_is_deterministic(d6_path: Path) -> None:
    first = report_json(build_report(analyse(d6_path, check_all=True)))
    second = report_json(build_report(analyse(d6_path, check_all=True)))
    assert first == second


def test_sl2v1_report_sections(sl2v1_path: Path) -> None:
    report = build_report(analyse(sl2v1_path))

    assert report.schema_version == 1
    assert report.basis == ["h", "e", "f", "m_+", "m_-"]
    assert report.verdict is not None
    assert report.verdict.status == "Simple"
    assert report.J is not None and report.J.dim == 2
    assert report.connection_classes == [[["-2"], ["-1"], ["1"], ["2"]]]
    assert report.nj_classes == {"J": [[["-1"], ["1"]]], "notJ": [[["-2"], ["2"]]]}
    assert report.semidirect is not None and report.semidirect.dim == 8
    assert report.multiplicativity is not None
    assert report.multiplicativity.holds and not report.multiplicativity.literal_holds


def test_decomposition_error_is_reported(lb2_path: Path) -> None:
    report = build_report(analyse(lb2_path))
    payload = json.loads(report_json(report))

    assert payload["decomposition"] is None
    assert payload["decomposition_error"].startswith("HNotMaximal")
    assert payload["verdict"] is None
    assert [entry["name"] for entry in payload["validity"]] == [
        "hom_leibniz",
        "regular",
        "hom_lie",
    ]


def test_render_validity_names_the_witness(sl2v1_path: Path) -> None:
    assert render_validity(analyse(sl2v1_path)) == (
        "Hom-Leibniz ✓, regular ✓, Hom-Lie ✗ (witness [m_+, h] ≠ −[h, m_+])"
    )


def test_render_decomposition_of_sl2(sl2_path: Path) -> None:
    text = render_decomposition(analyse(sl2_path))
    lines = text.splitlines()

    assert lines[0] == "H = span{h} (rank 1)"
    assert lines[1] == "Roots (2):"
    assert "  L_(-2) = span{e}" in lines
    assert "phi on H: [1]" in lines
    assert "Λ symmetric: yes" in lines


def test_render_connections_lists_certificates(sl2v1_path: Path) -> None:
    text = render_connections(analyse(sl2v1_path))
    assert text.startswith("Connection classes (1):\n  [(-2)] = {(-2), (-1), (1), (2)}")
    assert "Certificates:" in text


def test_render_simplicity_of_d6(d6_path: Path) -> None:
    text = render_simplicity(analyse(d6_path))

    assert "Verdict: NotSimple" in text
    assert "  witness: ideal generated by L_(-2, 0) = span{h, e, f}" in text
    assert "Hypotheses:" not in text


def test_render_report_sections(lb2_path: Path) -> None:
    text = render_report(analyse(lb2_path))
    sections = text.split("\n\n")

    assert sections[0] == "Algebra lb2 (dimension 2)"
    assert sections[2].startswith("Decomposition failed: HNotMaximal")


def test_render_simplicity_marks_skipped_necessary_conditions(fixtures_dir: Path) -> None:
    text = render_simplicity(analyse(fixtures_dir / "j_split.json"))

    assert "Necessary conditions: n/a (hypotheses not met: Λ symmetric)" in text
    assert "Verdict: Inconclusive" in text


def test_render_checks_counts_skipped_checks() -> None:
    checks = [
        passed("first"),
        not_applicable("second", "hypotheses not met"),
        failed("third", (0,), (Fraction(1),), "broken"),
    ]
    assert render_checks(checks).splitlines() == [
        "Checks: 2/3 hold (1 n/a)",
        "  ✗ third: broken",
    ]
