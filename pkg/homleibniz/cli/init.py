"""CLI command for first-run homleibniz setup."""

from __future__ import annotations

from pathlib import Path

import typer

from homleibniz.cli.common import EXIT_IO, config_path_option, fail
from homleibniz.config.models import HomLeibnizConfig
from homleibniz.config.store import ConfigStoreError, load_config, save_config


def init(
    config_path: Path | None = config_path_option(),
    reset: bool = typer.Option(False, help="Overwrite an existing config with the defaults."),
) -> None:
    """
    Write the persisted configuration, keeping existing values unless ``--reset``.

    :param config_path: Optional config path override.
    :type config_path: pathlib.Path | None
    :param reset: Whether to discard existing values.
    :type reset: bool
    :return: None.
    :rtype: None
    """
    try:
        config = HomLeibnizConfig() if reset else load_config(config_path)
        written = save_config(config, config_path)
    except ConfigStoreError as exc:
        fail(exc, EXIT_IO)

    typer.secho(f"Config saved: {written}", fg=typer.colors.GREEN)
    typer.secho(
        f"Separating multiplier: {config.search.separating_max_multiplier}, "
        f"JSON indent: {config.report.json_indent}, "
        f"check-all by default: {'yes' if config.report.check_all else 'no'}",
        fg=typer.colors.GREEN,
    )
