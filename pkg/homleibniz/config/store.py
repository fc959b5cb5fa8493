"""YAML-backed settings for homleibniz runs."""

from __future__ import annotations

import os
from pathlib import Path

import yaml
from pydantic import ValidationError

from homleibniz.config.models import HomLeibnizConfig
from homleibniz.errors import HomLeibnizError

CONFIG_PATH_ENV_VAR = "HOMLEIBNIZ_CONFIG_PATH"
CONFIG_DIR_NAME = "homleibniz"
DEFAULT_CONFIG_FILENAME = "config.yaml"
CONFIG_HEADER = "# homleibniz settings; delete a key to fall back to its default.\n"


class ConfigStoreError(HomLeibnizError):
    """Raised when persisted settings cannot be read, validated or written."""


def platform_config_dir() -> Path:
    """``%APPDATA%`` on Windows, ``$XDG_CONFIG_HOME`` (or ``~/.config``) elsewhere."""
    if os.name == "nt":
        return Path(os.getenv("APPDATA", Path.home() / "AppData" / "Roaming"))
    return Path(os.getenv("XDG_CONFIG_HOME", Path.home() / ".config"))


def resolve_config_path(config_path: str | Path | None = None) -> Path:
    """
    Pick the settings file: ``config_path``, then ``HOMLEIBNIZ_CONFIG_PATH``,
    then ``<platform config dir>/homleibniz/config.yaml``.

    :param config_path: Optional explicit path.
    :type config_path: str | pathlib.Path | None
    :return: Settings file path; it need not exist.
    :rtype: pathlib.Path
    """
    chosen = config_path if config_path is not None else os.getenv(CONFIG_PATH_ENV_VAR)
    if chosen:
        return Path(chosen).expanduser()
    return platform_config_dir() / CONFIG_DIR_NAME / DEFAULT_CONFIG_FILENAME


def _validation_summary(exc: ValidationError) -> str:
    return "; ".join(
        f"{'.'.join(str(part) for part in error['loc'])}: {error['msg']}"
        for error in exc.errors()
    )


def load_config(config_path: str | Path | None = None) -> HomLeibnizConfig:
    """
    Load settings; a missing or empty file means the defaults.

    :param config_path: Optional explicit path.
    :type config_path: str | pathlib.Path | None
    :return: Validated settings.
    :rtype: homleibniz.config.models.HomLeibnizConfig
    :raises ConfigStoreError: If the file is unreadable, not a mapping, or
        holds an invalid value.
    """
    path = resolve_config_path(config_path)
    if not path.is_file():
        return HomLeibnizConfig()

    try:
        raw = yaml.safe_load(path.read_text(encoding="utf-8")) or {}
    except (OSError, yaml.YAMLError) as exc:
        raise ConfigStoreError(f"Failed to read config file '{path}': {exc}") from exc
    if not isinstance(raw, dict):
        raise ConfigStoreError(f"Config file must contain a mapping at top level: {path}")

    try:
        return HomLeibnizConfig.model_validate(raw)
    except ValidationError as exc:
        raise ConfigStoreError(
            f"Config schema validation failed for '{path}': {_validation_summary(exc)}"
        ) from exc


def save_config(config: HomLeibnizConfig, config_path: str | Path | None = None) -> Path:
    """
    Write ``config`` as commented YAML, creating parent directories.

    :param config: Settings to persist.
    :type config: homleibniz.config.models.HomLeibnizConfig
    :param config_path: Optional explicit path.
    :type config_path: str | pathlib.Path | None
    :return: The written path.
    :rtype: pathlib.Path
    :raises ConfigStoreError: If the file cannot be written.
    """
    path = resolve_config_path(config_path)
    body = yaml.safe_dump(config.model_dump(mode="json"), sort_keys=False)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(CONFIG_HEADER + body, encoding="utf-8")
    except OSError as exc:
        raise ConfigStoreError(f"Failed to write config file '{path}': {exc}") from exc
    return path
