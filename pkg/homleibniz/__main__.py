"""Package entrypoint for the homleibniz CLI."""

from __future__ import annotations

from homleibniz.cli import app

if __name__ == "__main__":
    app()
