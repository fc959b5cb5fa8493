"""CLI commands that build new algebra files.

``--json`` and ``--check-all`` apply to the written algebra: it is analysed
like a ``validate`` input once the file exists.
"""

from __future__ import annotations

from pathlib import Path

import typer

from homleibniz.app.pipeline import semidirect_file, twist_file
from homleibniz.assemblers.text_report import render_semidirect, render_validity
from homleibniz.cli.common import (
    EXIT_MATH,
    algebra_argument,
    check_all_option,
    config_path_option,
    exit_code_for,
    fail,
    json_option,
    load_settings,
    quiet_option,
    report_analysis,
)
from homleibniz.config.models import HomLeibnizConfig
from homleibniz.errors import HomLeibnizError


def _analyse_written(
    written: Path,
    settings: HomLeibnizConfig,
    *,
    json_out: Path | None,
    quiet: bool,
    check_all: bool,
) -> None:
    if json_out is None and not (check_all or settings.report.check_all):
        return
    report_analysis(
        written,
        render_validity,
        settings,
        json_out=json_out,
        quiet=quiet,
        check_all=check_all,
        needs_decomposition=False,
    )


def semidirect(
    path: Path = algebra_argument(),
    out: Path = typer.Option(..., dir_okay=False, help="Output algebra JSON file."),
    json_out: Path | None = json_option(),
    quiet: bool = quiet_option(),
    check_all: bool = check_all_option(),
    config_path: Path | None = config_path_option(),
) -> None:
    """Write the semidirect Hom-Lie algebra ``L ⋊ L/J`` and check it."""
    settings = load_settings(config_path)
    try:
        written, result = semidirect_file(path, out)
    except (HomLeibnizError, OSError) as exc:
        fail(exc, exit_code_for(exc))
    if not quiet:
        print(render_semidirect(result))
        print(f"Semidirect algebra written to: {written}")
    _analyse_written(written, settings, json_out=json_out, quiet=quiet, check_all=check_all)
    if not result.hom_lie.holds:
        fail(result.hom_lie.message, EXIT_MATH)


def twist(
    path: Path = algebra_argument(),
    psi: Path = typer.Option(
        ...,
        exists=True,
        dir_okay=False,
        readable=True,
        help="Path to a JSON file holding the twisting matrix.",
    ),
    out: Path = typer.Option(..., dir_okay=False, help="Output algebra JSON file."),
    name: str | None = typer.Option(None, help="Name of the twisted algebra."),
    json_out: Path | None = json_option(),
    quiet: bool = quiet_option(),
    check_all: bool = check_all_option(),
    config_path: Path | None = config_path_option(),
) -> None:
    """Yau-twist an algebra by an automorphism ``psi`` commuting with phi."""
    settings = load_settings(config_path)
    try:
        written = twist_file(path, psi, out, name=name)
    except (HomLeibnizError, OSError) as exc:
        fail(exc, exit_code_for(exc))
    if not quiet:
        typer.secho(f"Twisted algebra written to: {written}", fg=typer.colors.GREEN)
    _analyse_written(written, settings, json_out=json_out, quiet=quiet, check_all=check_all)
