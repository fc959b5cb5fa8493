"""Logging setup for command-line runs."""

from __future__ import annotations

import logging

from rich.console import Console
from rich.logging import RichHandler

LOGGER_NAME = "homleibniz"


def configure_logging(verbose: bool = False) -> None:
    """
    Route ``homleibniz`` log records to stderr through rich.

    :param verbose: Log at DEBUG instead of WARNING.
    :type verbose: bool
    :return: None.
    :rtype: None
    """
    logger = logging.getLogger(LOGGER_NAME)
    for handler in list(logger.handlers):
        if isinstance(handler, RichHandler):
            logger.removeHandler(handler)
    handler = RichHandler(
        console=Console(stderr=True), show_path=False, show_time=False, markup=False
    )
    handler.setFormatter(logging.Formatter("%(name)s: %(message)s"))
    logger.addHandler(handler)
    logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    logger.propagate = False
