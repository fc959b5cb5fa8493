"""CLI app for homleibniz commands."""

from __future__ import annotations

import typer

from homleibniz.cli.analyse import (
    connections,
    decompose,
    decomposition,
    report,
    simplicity,
    validate,
)
from homleibniz.cli.construct import semidirect, twist
from homleibniz.cli.init import init
from homleibniz.log import configure_logging

app = typer.Typer(
    add_completion=False,
    no_args_is_help=True,
    help="Structure analysis of split regular Hom-Leibniz algebras over the rationals.",
)


@app.callback()
def main(
    verbose: bool = typer.Option(False, "--verbose", "-v", help="Log pipeline steps to stderr."),
) -> None:
    """Structure analysis of split regular Hom-Leibniz algebras over the rationals."""
    configure_logging(verbose)


app.command()(validate)
app.command()(decompose)
app.command()(connections)
app.command()(decomposition)
app.command()(simplicity)
app.command()(report)
app.command()(semidirect)
app.command()(twist)
app.command()(init)
