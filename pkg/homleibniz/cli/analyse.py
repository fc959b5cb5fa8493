"""CLI commands that analyse one algebra file."""

from __future__ import annotations

from pathlib import Path

from homleibniz.assemblers.text_report import (
    render_connections,
    render_decomposition,
    render_report,
    render_simplicity,
    render_structure,
    render_validity,
)
from homleibniz.cli.common import (
    algebra_argument,
    check_all_option,
    config_path_option,
    json_option,
    quiet_option,
    run_analysis_command,
)


def validate(
    path: Path = algebra_argument(),
    json_out: Path | None = json_option(),
    quiet: bool = quiet_option(),
    check_all: bool = check_all_option(),
    config_path: Path | None = config_path_option(),
) -> None:
    """Check the Hom-Leibniz identity, regularity and the Hom-Lie identities."""
    run_analysis_command(
        path,
        render_validity,
        json_out=json_out,
        quiet=quiet,
        check_all=check_all,
        config_path=config_path,
        needs_decomposition=False,
    )


def decompose(
    path: Path = algebra_argument(),
    json_out: Path | None = json_option(),
    quiet: bool = quiet_option(),
    check_all: bool = check_all_option(),
    config_path: Path | None = config_path_option(),
) -> None:
    """Compute the root-space decomposition relative to the file's H."""
    run_analysis_command(
        path,
        render_decomposition,
        json_out=json_out,
        quiet=quiet,
        check_all=check_all,
        config_path=config_path,
    )


def connections(
    path: Path = algebra_argument(),
    json_out: Path | None = json_option(),
    quiet: bool = quiet_option(),
    check_all: bool = check_all_option(),
    config_path: Path | None = config_path_option(),
) -> None:
    """Partition the roots into connection classes and print every certificate."""
    run_analysis_command(
        path,
        render_connections,
        json_out=json_out,
        quiet=quiet,
        check_all=check_all,
        config_path=config_path,
    )


def decomposition(
    path: Path = algebra_argument(),
    json_out: Path | None = json_option(),
    quiet: bool = quiet_option(),
    check_all: bool = check_all_option(),
    config_path: Path | None = config_path_option(),
) -> None:
    """Decompose the algebra as ``U + Σ I_[α]`` over the connection classes."""
    run_analysis_command(
        path,
        render_structure,
        json_out=json_out,
        quiet=quiet,
        check_all=check_all,
        config_path=config_path,
    )


def simplicity(
    path: Path = algebra_argument(),
    json_out: Path | None = json_option(),
    quiet: bool = quiet_option(),
    check_all: bool = check_all_option(),
    config_path: Path | None = config_path_option(),
) -> None:
    """Decide simplicity: a witness ideal, a certificate, or the missing hypotheses."""
    run_analysis_command(
        path,
        render_simplicity,
        json_out=json_out,
        quiet=quiet,
        check_all=check_all,
        config_path=config_path,
    )


def report(
    path: Path = algebra_argument(),
    json_out: Path | None = json_option(),
    quiet: bool = quiet_option(),
    check_all: bool = check_all_option(),
    config_path: Path | None = config_path_option(),
) -> None:
    """Run every stage and print the full report; a failed decomposition is only reported."""
    run_analysis_command(
        path,
        render_report,
        json_out=json_out,
        quiet=quiet,
        check_all=check_all,
        config_path=config_path,
        needs_decomposition=False,
    )
