"""Shared option declarations and the error-to-exit-code policy of the CLI."""

from __future__ import annotations

from pathlib import Path
from typing import Any, Callable, NoReturn

import typer

from homleibniz.app.pipeline import AnalysisResult, analyse
from homleibniz.assemblers.text_report import render_checks
from homleibniz.config.models import HomLeibnizConfig
from homleibniz.config.store import ConfigStoreError, load_config
from homleibniz.errors import HomLeibnizError
from homleibniz.loaders.algebra_loader import AlgebraLoadError
from homleibniz.mappers.report_mapper import build_report, report_json

EXIT_MATH = 1
EXIT_IO = 2


def algebra_argument() -> Any:
    return typer.Argument(
        ...,
        exists=True,
        dir_okay=False,
        readable=True,
        help="Path to an algebra JSON file.",
    )


def json_option() -> Any:
    return typer.Option(
        None, "--json", dir_okay=False, help="Also write the JSON report to this file."
    )


def quiet_option() -> Any:
    return typer.Option(False, "--quiet", "-q", help="Suppress the text report.")


def check_all_option() -> Any:
    return typer.Option(
        False,
        "--check-all",
        help="Run every structural verifier and exit 1 if any of them fails.",
    )


def config_path_option() -> Any:
    return typer.Option(None, help="Optional config path override.")


def fail(exc: object, code: int) -> NoReturn:
    typer.secho(f"Error: {exc}", fg=typer.colors.RED, err=True)
    raise typer.Exit(code=code)


def exit_code_for(exc: BaseException) -> int:
    """2 for input, output and configuration faults; 1 for every mathematical rejection."""
    if isinstance(exc, (AlgebraLoadError, ConfigStoreError, OSError)):
        return EXIT_IO
    return EXIT_MATH


def load_settings(config_path: Path | None) -> HomLeibnizConfig:
    try:
        return load_config(config_path)
    except ConfigStoreError as exc:
        fail(exc, EXIT_IO)


def write_json(result: AnalysisResult, out: Path, indent: int) -> None:
    try:
        out.parent.mkdir(parents=True, exist_ok=True)
        out.write_text(report_json(build_report(result), indent=indent), encoding="utf-8")
    except OSError as exc:
        fail(exc, EXIT_IO)


def run_analysis_command(
    path: Path,
    render: Callable[[AnalysisResult], str],
    *,
    json_out: Path | None,
    quiet: bool,
    check_all: bool,
    config_path: Path | None,
    needs_decomposition: bool = True,
) -> None:
    """
    Analyse ``path``, print one rendered section and apply the exit-code policy.

    :param path: Algebra file.
    :type path: pathlib.Path
    :param render: Section renderer from ``homleibniz.assemblers.text_report``.
    :type render: collections.abc.Callable
    :param json_out: Optional JSON report destination.
    :type json_out: pathlib.Path | None
    :param quiet: Suppress stdout output.
    :type quiet: bool
    :param check_all: Run the structural verifiers.
    :type check_all: bool
    :param config_path: Optional config path override.
    :type config_path: pathlib.Path | None
    :param needs_decomposition: Exit 1 when the decomposition fails.
    :type needs_decomposition: bool
    :return: None.
    :rtype: None
    """
    report_analysis(
        path,
        render,
        load_settings(config_path),
        json_out=json_out,
        quiet=quiet,
        check_all=check_all,
        needs_decomposition=needs_decomposition,
    )


def report_analysis(
    path: Path,
    render: Callable[[AnalysisResult], str],
    settings: HomLeibnizConfig,
    *,
    json_out: Path | None,
    quiet: bool,
    check_all: bool,
    needs_decomposition: bool = True,
) -> None:
    """Analyse ``path`` under already loaded settings; see :func:`run_analysis_command`."""
    check_all = check_all or settings.report.check_all
    try:
        result = analyse(
            path,
            check_all=check_all,
            max_multiplier=settings.search.separating_max_multiplier,
        )
    except (HomLeibnizError, OSError) as exc:
        fail(exc, exit_code_for(exc))

    if json_out is not None:
        write_json(result, json_out, settings.report.json_indent)
    if not quiet:
        print(render(result))
        if result.checks:
            print(render_checks(result.checks))

    if needs_decomposition and result.decomposition_error is not None:
        fail(result.decomposition_error, EXIT_MATH)
    if check_all and not result.checks_hold:
        typer.secho("Error: some checks failed.", fg=typer.colors.RED, err=True)
        raise typer.Exit(code=EXIT_MATH)
